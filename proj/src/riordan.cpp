#include "motzkin/riordan.hpp"

#include <algorithm>
#include <sstream>

#include "motzkin/closedform.hpp"
#include "motzkin/error.hpp"

namespace motzkin {

std::string to_string(Source source) {
  switch (source) {
    case Source::AZ: return "az";
    case Source::DH: return "dh";
    case Source::Oracle: return "oracle";
  }
  return "?";
}

Sequence Triangle::column(int m) const {
  Sequence out;
  for (int n = m; n < size(); ++n) out.push_back(at(n, m));
  return out;
}

Series Triangle::column_series(int m) const {
  if (size() == 0) throw Error(Errc::InsufficientOrder, "empty triangle");
  std::vector<BigInt> c(static_cast<std::size_t>(size()));
  for (int n = m; n < size(); ++n) c[static_cast<std::size_t>(n)] = at(n, m);
  return Series(std::move(c), static_cast<std::size_t>(size() - 1));
}

Triangle triangle_from_az(const Series& A, const Series& Z, int rows) {
  if (rows < 1) throw Error(Errc::BadParams, "rows must be >= 1");
  if (A[0] == 0) throw Error(Errc::BadA, "A(0) must be nonzero");
  Triangle t;
  t.source = Source::AZ;
  t.rows.reserve(static_cast<std::size_t>(rows));
  t.rows.push_back({BigInt(1)});
  for (int i = 1; i < rows; ++i) {
    const Sequence& prev = t.rows.back();
    Sequence row(static_cast<std::size_t>(i) + 1);
    for (int s = 0; s <= i - 1; ++s) {
      const BigInt z = Z[static_cast<std::size_t>(s)];
      if (z != 0) row[0] += z * prev[static_cast<std::size_t>(s)];
    }
    for (int j = 1; j <= i; ++j) {
      BigInt acc = 0;
      for (int s = 0; j - 1 + s <= i - 1; ++s) {
        const BigInt a = A[static_cast<std::size_t>(s)];
        if (a != 0) acc += a * prev[static_cast<std::size_t>(j - 1 + s)];
      }
      row[static_cast<std::size_t>(j)] = std::move(acc);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

AZSpec motzkin_az(const ColorScheme& scheme) {
  scheme.check();
  const auto l = static_cast<std::size_t>(scheme.order);
  std::vector<BigInt> a(l + 2), z(l + 1);
  a[0] = 1;
  for (std::size_t i = 0; i < l; ++i) {
    a[i + 1] = scheme.beta[i];
    z[i] = scheme.alpha[i];
  }
  a[l + 1] = 1;
  z[l] = 1;
  return {Series::polynomial(std::move(a)), Series::polynomial(std::move(z))};
}

ColorScheme scheme_from_az(const AZSpec& spec) {
  const auto& a = spec.A.coeffs();
  const auto& z = spec.Z.coeffs();
  if (!spec.A.is_exact() || !spec.Z.is_exact() || z.size() < 2 || a.size() != z.size() + 1 ||
      a.front() != 1 || a.back() != 1 || z.back() != 1) {
    throw Error(Errc::InvalidScheme, "A/Z pair is not of colored Motzkin shape");
  }
  const std::size_t l = z.size() - 1;
  std::vector<int> alpha(l), beta(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (z[i] < 0 || a[i + 1] < 0 || z[i] > 1'000'000 || a[i + 1] > 1'000'000) {
      throw Error(Errc::InvalidScheme, "color counts out of range");
    }
    alpha[i] = static_cast<int>(z[i]);
    beta[i] = static_cast<int>(a[i + 1]);
  }
  return ColorScheme(alpha, beta);
}

namespace {

void check_dyck_params(int k, int a) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (a < 0 || a > k - 1) throw Error(Errc::BadParams, "depth a must lie in [0, k-1]");
}

std::vector<BigInt> binomial_row(int k) {
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) row[static_cast<std::size_t>(i)] = binomial(k, i);
  return row;
}

// ((1+t)^k - (1+t)^{k-a-1}) / t, coefficient i = C(k,i+1) - C(k-a-1,i+1).
std::vector<BigInt> dyck_z(int k, int a) {
  std::vector<BigInt> z(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    z[static_cast<std::size_t>(i)] = binomial(k, i + 1) - binomial(k - a - 1, i + 1);
  }
  return z;
}

}  // namespace

AZSpec dyck_az(int k, int a) {
  check_dyck_params(k, a);
  return {Series::polynomial(binomial_row(k)), Series::polynomial(dyck_z(k, a))};
}

AZSpec fine_az(int k, int a, int r) {
  check_dyck_params(k, a);
  if (r < 1 || r > k - 1) throw Error(Errc::BadParams, "r must lie in [1, k-1]");
  std::vector<BigInt> z = dyck_z(k, a);
  for (int i = 0; i < k; ++i) {
    auto& zi = z[static_cast<std::size_t>(i)];
    zi -= binomial(k - r - 1, i);
    if (zi < 0) {
      throw Error(Errc::NegativeColorCount,
                  "Z coefficient " + std::to_string(i) + " is negative for k=" +
                      std::to_string(k) + ", a=" + std::to_string(a) + ", r=" + std::to_string(r));
    }
  }
  return {Series::polynomial(binomial_row(k)), Series::polynomial(std::move(z))};
}

DHSpec dh_from_az(const AZSpec& spec, std::size_t order) {
  Series h = ps_solve_h(spec.A, order);
  const Series tz = ps_compose(spec.Z, h).shifted(1);
  const Series one(std::vector<BigInt>{1}, order);
  Series d = ps_div(one, Series::constant(1) - tz, order);
  return {std::move(d), std::move(h)};
}

Triangle triangle_from_dh(const DHSpec& spec, int rows) {
  if (rows < 1) throw Error(Errc::BadParams, "rows must be >= 1");
  if (spec.d[0] == 0 || spec.h[0] != 0 || spec.h[1] == 0) {
    throw Error(Errc::NotProper, "need d(0) != 0, h(0) = 0 and h'(0) != 0");
  }
  const auto top = static_cast<std::size_t>(rows - 1);
  if (spec.d.order() < top || spec.h.order() < top) {
    throw Error(Errc::InsufficientOrder,
                "series must be known to order " + std::to_string(top) + " for " +
                    std::to_string(rows) + " rows");
  }
  Triangle t;
  t.source = Source::DH;
  t.rows.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) t.rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1);
  const Series h = spec.h.truncated(top);
  Series column = spec.d.truncated(top);  // d h^j
  for (int j = 0; j < rows; ++j) {
    for (int i = j; i < rows; ++i) {
      t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = column[static_cast<std::size_t>(i)];
    }
    column = column * h;
  }
  return t;
}

AZSpec az_from_triangle(const Triangle& triangle) {
  const int rows = triangle.size();
  if (rows < 2) throw Error(Errc::InsufficientOrder, "need at least two rows to recover A and Z");
  if (triangle.at(0, 0) != 1) throw Error(Errc::NotRiordan, "entry (0,0) must be 1");
  // Row i, columns 1 and 0, pin down a_{i-1} and z_{i-1}: both multiply the
  // diagonal entry (i-1,i-1), everything else is already known.
  std::vector<BigInt> a(static_cast<std::size_t>(rows - 1));
  std::vector<BigInt> z(static_cast<std::size_t>(rows - 1));
  for (int i = 1; i < rows; ++i) {
    const BigInt& diag = triangle.at(i - 1, i - 1);
    if (diag == 0) throw Error(Errc::NotRiordan, "zero diagonal entry");
    BigInt ra = triangle.at(i, 1);
    BigInt rz = triangle.at(i, 0);
    for (int s = 0; s < i - 1; ++s) {
      ra -= a[static_cast<std::size_t>(s)] * triangle.at(i - 1, s);
      rz -= z[static_cast<std::size_t>(s)] * triangle.at(i - 1, s);
    }
    a[static_cast<std::size_t>(i - 1)] = exact_divide(ra, diag);
    z[static_cast<std::size_t>(i - 1)] = exact_divide(rz, diag);
  }
  const auto order = static_cast<std::size_t>(rows - 2);
  AZSpec spec{Series(std::move(a), order), Series(std::move(z), order)};
  if (spec.A[0] == 0) throw Error(Errc::NotRiordan, "recovered A(0) is zero");
  // The remaining columns must follow from the same A.
  for (int i = 1; i < rows; ++i) {
    for (int j = 2; j <= i; ++j) {
      BigInt acc = 0;
      for (int s = 0; j - 1 + s <= i - 1; ++s) acc += spec.A[static_cast<std::size_t>(s)] * triangle.at(i - 1, j - 1 + s);
      if (acc != triangle.at(i, j)) {
        throw Error(Errc::NotRiordan, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") contradicts the recovered A-sequence");
      }
    }
  }
  return spec;
}

void check_nonnegative(const Triangle& triangle) {
  for (int n = 0; n < triangle.size(); ++n) {
    for (int m = 0; m <= n; ++m) {
      if (triangle.at(n, m) < 0) {
        throw Error(Errc::NegativeEntry,
                    "entry (" + std::to_string(n) + "," + std::to_string(m) + ") is negative");
      }
    }
  }
}

Triangle motzkin_triangle(const ColorScheme& scheme, int rows) {
  Triangle t = triangle_from_az(motzkin_az(scheme), rows);
  check_nonnegative(t);
  return t;
}

Triangle dyck_triangle(int k, int a, int rows) {
  Triangle t = triangle_from_az(dyck_az(k, a), rows);
  check_nonnegative(t);
  return t;
}

Triangle fine_triangle(int k, int a, int r, int rows) {
  Triangle t = triangle_from_az(fine_az(k, a, r), rows);
  check_nonnegative(t);
  return t;
}

Sequence row_sums(const Triangle& triangle) {
  Sequence out;
  out.reserve(triangle.rows.size());
  for (const auto& row : triangle.rows) {
    BigInt s = 0;
    for (const auto& x : row) s += x;
    out.push_back(std::move(s));
  }
  return out;
}

Sequence binomial_transform(const Sequence& seq) {
  Sequence out(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      out[n] += binomial(static_cast<long>(n), static_cast<long>(i)) * seq[i];
    }
  }
  return out;
}

std::string triangle_to_csv(const Triangle& triangle) {
  std::string out;
  for (const auto& row : triangle.rows) {
    out += format_sequence(row);
    out += '\n';
  }
  return out;
}

std::string triangle_to_text(const Triangle& triangle) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : triangle.rows) {
    auto& line = cells.emplace_back();
    for (const auto& x : row) {
      line.push_back(to_string(x));
      width = std::max(width, line.back().size());
    }
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j > 0) os << ' ';
      os << std::string(width - line[j].size(), ' ') << line[j];
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json triangle_to_json(const Triangle& triangle) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : triangle.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return {{"source", to_string(triangle.source)}, {"rows", std::move(rows)}};
}

}  // namespace motzkin
