#include "motzkin/series.hpp"

#include <algorithm>

#include "motzkin/error.hpp"

namespace motzkin {

namespace {

std::size_t common_order(const Series& f, const Series& g) {
  return std::min(f.order(), g.order());
}

// Number of coefficients to compute for a result of the given order whose
// exact degree would be at most `degree`.
std::size_t result_size(std::size_t order, std::size_t degree) {
  return order == Series::kExact ? degree + 1 : order + 1;
}

std::size_t degree_bound(const Series& s) {
  return s.coeffs().empty() ? 0 : s.coeffs().size() - 1;
}

}  // namespace

Series::Series(std::vector<BigInt> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)), order_(order) {
  normalize();
}

Series Series::polynomial(std::vector<BigInt> coeffs) {
  return Series(std::move(coeffs), kExact);
}

void Series::normalize() {
  if (is_exact()) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  } else {
    coeffs_.resize(order_ + 1);
  }
}

BigInt Series::operator[](std::size_t i) const {
  if (!is_exact() && i > order_) {
    throw Error(Errc::InsufficientOrder, "coefficient " + std::to_string(i) +
                                             " lies beyond order " + std::to_string(order_));
  }
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

Series Series::truncated(std::size_t order) const {
  if (order > order_) {
    throw Error(Errc::InsufficientOrder, "cannot extend a series of order " +
                                             std::to_string(order_) + " to " +
                                             std::to_string(order));
  }
  std::vector<BigInt> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                               std::min(coeffs_.size(), order + 1)));
  return Series(std::move(c), order);
}

Series Series::shifted(std::size_t m) const {
  std::vector<BigInt> c(m, BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Series(std::move(c), is_exact() ? kExact : order_ + m);
}

Series operator+(const Series& f, const Series& g) {
  const std::size_t order = common_order(f, g);
  const std::size_t n = result_size(order, std::max(degree_bound(f), degree_bound(g)));
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < f.coeffs().size()) c[i] += f.coeffs()[i];
    if (i < g.coeffs().size()) c[i] += g.coeffs()[i];
  }
  return Series(std::move(c), order);
}

Series operator-(const Series& f, const Series& g) {
  return f + BigInt(-1) * g;
}

Series operator*(const BigInt& c, const Series& f) {
  std::vector<BigInt> out = f.coeffs();
  for (auto& x : out) x *= c;
  return Series(std::move(out), f.order());
}

Series operator*(const Series& f, const Series& g) {
  const std::size_t order = common_order(f, g);
  const std::size_t n = result_size(order, degree_bound(f) + degree_bound(g));
  std::vector<BigInt> c(n);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series(std::move(c), order);
}

bool operator==(const Series& f, const Series& g) {
  const std::size_t order = common_order(f, g);
  const std::size_t n = result_size(order, std::max(degree_bound(f), degree_bound(g)));
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] != g[i]) return false;
  }
  return true;
}

Series ps_mul(const Series& f, const Series& g) { return f * g; }

Series ps_pow(const Series& f, unsigned e) {
  Series result = Series(std::vector<BigInt>{1}, f.order());
  Series base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Series ps_compose(const Series& f, const Series& g) {
  if (g[0] != 0) throw Error(Errc::NonzeroInnerConstant, "inner series must vanish at 0");
  // g = O(t), so the first N+1 coefficients of f(g) only involve f_0..f_N
  // and g_1..g_N.
  const std::size_t order = common_order(f, g);
  std::size_t top = degree_bound(f);
  if (order != Series::kExact) top = std::min(top, order);
  while (top > 0 && f.coeffs()[top] == 0) --top;
  const Series inner = order == Series::kExact ? g : g.truncated(order);
  Series acc(std::vector<BigInt>{f[top]}, order);
  for (std::size_t i = top; i-- > 0;) {
    acc = acc * inner + Series(std::vector<BigInt>{f[i]}, order);
  }
  return acc;
}

Series ps_div(const Series& f, const Series& g) {
  const std::size_t order = common_order(f, g);
  if (order == Series::kExact) {
    throw Error(Errc::UnboundedResult,
                "quotient of two polynomials needs an explicit truncation order");
  }
  const BigInt g0 = g[0];
  if (g0 != 1 && g0 != -1) {
    throw Error(Errc::NonUnitConstant, "divisor constant term must be +1 or -1");
  }
  std::vector<BigInt> q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt acc = f[n];
    for (std::size_t j = 1; j <= n && j < g.coeffs().size(); ++j) acc -= g.coeffs()[j] * q[n - j];
    q[n] = acc * g0;  // g0 is its own inverse
  }
  return Series(std::move(q), order);
}

Series ps_div(const Series& f, const Series& g, std::size_t order) {
  return ps_div(f.truncated(order), g.truncated(order));
}

Series ps_solve_h(const Series& A, std::size_t order) {
  if (A[0] == 0) throw Error(Errc::ZeroConstantA, "A(0) must be nonzero");
  if (order > 0 && A.order() != Series::kExact && A.order() + 1 < order) {
    throw Error(Errc::InsufficientOrder, "A is not known far enough to determine h");
  }
  // Substituting h_{i-1} (correct mod t^i) into t A(h) gives h correct mod
  // t^{i+1}: coefficient i of the result only sees coefficients < i of h.
  Series h(std::vector<BigInt>{}, 0);
  for (std::size_t i = 1; i <= order; ++i) {
    h = ps_compose(A.truncated(i - 1), h).shifted(1);
  }
  return h;
}

Series ps_fuss_catalan(int k, std::size_t order) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  Series c(std::vector<BigInt>{1}, 0);
  for (std::size_t i = 1; i <= order; ++i) {
    c = Series(std::vector<BigInt>{1}, i) + ps_pow(c, static_cast<unsigned>(k)).shifted(1);
  }
  return c;
}

std::string format_series(const Series& s) {
  Sequence c = s.coeffs();
  if (c.empty()) c.push_back(0);
  return format_sequence(c);
}

Series parse_series(std::string_view text) {
  Sequence c = parse_sequence(text);
  if (c.empty()) throw Error(Errc::ParseError, "a series needs at least one coefficient");
  const std::size_t order = c.size() - 1;
  return Series(std::move(c), order);
}

}  // namespace motzkin
