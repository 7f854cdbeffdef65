#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

/// A formal power series with integer coefficients, known modulo t^{N+1}.
///
/// Polynomials are a special case: they are exact (every coefficient past the
/// stored degree is zero) and carry order() == kExact. Binary operations
/// truncate to the smaller finite order of their operands, so a result never
/// claims coefficients that one of its inputs did not determine.
class Series {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  /// The zero polynomial.
  Series() = default;

  /// Truncated series c_0 + ... + c_N t^N with N = order. Missing coefficients
  /// are zero; extra ones are dropped.
  Series(std::vector<BigInt> coeffs, std::size_t order);

  /// Exact polynomial.
  static Series polynomial(std::vector<BigInt> coeffs);
  static Series constant(BigInt c) { return polynomial({std::move(c)}); }
  /// The polynomial t.
  static Series t() { return polynomial({0, 1}); }

  bool is_exact() const { return order_ == kExact; }
  std::size_t order() const { return order_; }

  /// Coefficient of t^i. Throws InsufficientOrder past a finite order.
  BigInt operator[](std::size_t i) const;

  /// Stored coefficients (exact: up to the degree; otherwise exactly N+1).
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Forgets everything past t^N (exact series become truncated ones).
  Series truncated(std::size_t order) const;

  /// Multiplies by t^m.
  Series shifted(std::size_t m) const;

  friend Series operator+(const Series& f, const Series& g);
  friend Series operator-(const Series& f, const Series& g);
  friend Series operator*(const Series& f, const Series& g);
  friend Series operator*(const BigInt& c, const Series& f);

  /// Equality of the coefficients both sides determine.
  friend bool operator==(const Series& f, const Series& g);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
  std::size_t order_ = kExact;
};

/// Cauchy product modulo the common truncation.
Series ps_mul(const Series& f, const Series& g);

/// f^e, e >= 0.
Series ps_pow(const Series& f, unsigned e);

/// f(g(t)) by Horner's rule. Throws NonzeroInnerConstant unless g(0) = 0.
Series ps_compose(const Series& f, const Series& g);

/// q with q * g = f. g(0) must be +1 or -1 (NonUnitConstant otherwise); the
/// quotient of two polynomials has no natural order and raises UnboundedResult.
Series ps_div(const Series& f, const Series& g);

/// Same, with both operands first truncated to order N.
Series ps_div(const Series& f, const Series& g, std::size_t order);

/// The unique h with h(0) = 0 and h = t A(h) modulo t^{N+1}.
/// Throws ZeroConstantA when A(0) = 0.
Series ps_solve_h(const Series& A, std::size_t order);

/// C_k(t) = 1 + t C_k(t)^k modulo t^{N+1}. Throws BadParams for k < 2.
Series ps_fuss_catalan(int k, std::size_t order);

/// Comma-separated coefficients c_0..c_N; the parsed series has order N.
std::string format_series(const Series& s);
Series parse_series(std::string_view text);

}  // namespace motzkin
