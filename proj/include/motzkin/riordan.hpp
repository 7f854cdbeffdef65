#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "motzkin/bigint.hpp"
#include "motzkin/paths.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// How a triangle was produced.
enum class Source { AZ, DH, Oracle };

std::string to_string(Source source);

/// Lower-triangular array; row n holds entries (n,0)..(n,n).
struct Triangle {
  std::vector<Sequence> rows;
  Source source = Source::AZ;

  int size() const { return static_cast<int>(rows.size()); }
  const BigInt& at(int n, int m) const { return rows.at(n).at(m); }

  /// Entries (m,m), (m+1,m), ..., (size-1,m).
  Sequence column(int m) const;
  /// Column m as a series: coefficient n is (n,m), zero above the diagonal.
  Series column_series(int m) const;

  /// Entrywise comparison; the source tag is ignored.
  bool same_entries(const Triangle& other) const { return rows == other.rows; }
};

struct AZSpec {
  Series A;
  Series Z;
};

struct DHSpec {
  Series d;
  Series h;
};

/// Fills `rows` rows from (0,0) = 1:
///   (i,j) = sum_s a_s (i-1, j-1+s) for j >= 1,   (i,0) = sum_s z_s (i-1, s).
/// Throws BadA when A(0) = 0 and BadParams when rows < 1.
Triangle triangle_from_az(const Series& A, const Series& Z, int rows);
inline Triangle triangle_from_az(const AZSpec& spec, int rows) {
  return triangle_from_az(spec.A, spec.Z, rows);
}

/// A = 1 + beta_0 t + ... + beta_{l-1} t^l + t^{l+1},
/// Z = alpha_0 + ... + alpha_{l-1} t^{l-1} + t^l.
AZSpec motzkin_az(const ColorScheme& scheme);

/// Reads the color tuples back out of a pair shaped like motzkin_az's output.
/// Throws InvalidScheme when the polynomials do not have that shape.
ColorScheme scheme_from_az(const AZSpec& spec);

/// A = (1+t)^k, Z = ((1+t)^k - (1+t)^{k-a-1}) / t.
AZSpec dyck_az(int k, int a);

/// dyck_az with the extra term -(1+t)^{k-r-1} in Z. Throws NegativeColorCount
/// if a coefficient of Z comes out negative.
AZSpec fine_az(int k, int a, int r);

/// h = t A(h) and d = 1 / (1 - t Z(h)), both modulo t^{N+1}.
DHSpec dh_from_az(const AZSpec& spec, std::size_t order);

/// Entry (i,j) = [t^i] d h^j. Throws NotProper unless d(0) != 0, h(0) = 0 and
/// h'(0) != 0; InsufficientOrder when the series are shorter than rows-1.
Triangle triangle_from_dh(const DHSpec& spec, int rows);

/// Recovers A and Z (to order rows-2) from a triangle built by the A/Z rule.
/// Throws InsufficientOrder with fewer than two rows, InexactDivision when a
/// coefficient is not an integer and NotRiordan when the remaining entries
/// disagree with the recovered sequences.
AZSpec az_from_triangle(const Triangle& triangle);

/// Triangles of the path families, with every entry checked to be
/// non-negative (NegativeEntry otherwise).
Triangle motzkin_triangle(const ColorScheme& scheme, int rows);
Triangle dyck_triangle(int k, int a, int rows);
Triangle fine_triangle(int k, int a, int r, int rows);
void check_nonnegative(const Triangle& triangle);

Sequence row_sums(const Triangle& triangle);

/// b_n = sum_i C(n,i) a_i.
Sequence binomial_transform(const Sequence& seq);

// Rendering.
std::string triangle_to_csv(const Triangle& triangle);
std::string triangle_to_text(const Triangle& triangle);
nlohmann::json triangle_to_json(const Triangle& triangle);

}  // namespace motzkin
