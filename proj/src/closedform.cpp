#include "motzkin/closedform.hpp"

#include "motzkin/error.hpp"

namespace motzkin {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays equal to C(n-k+i, i) after step i, so each division is exact
  for (long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

BigInt exact_divide(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InexactDivision, "division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw Error(Errc::InexactDivision, to_string(num) + " is not divisible by " + to_string(den));
  }
  return q;
}

BigInt fuss_catalan_number(int k, int n) {
  if (k < 2 || n < 0) throw Error(Errc::BadParams, "need k >= 2 and n >= 0");
  const long m = static_cast<long>(k) * n + 1;
  return exact_divide(binomial(m, n), m);
}

BigInt prodinger_count(int k, int a, int n) {
  if (k < 2 || a < 0 || a > k - 1 || n < 0) {
    throw Error(Errc::BadParams, "need k >= 2, 0 <= a <= k-1 and n >= 0");
  }
  const long m = static_cast<long>(k) * n + a + 1;
  return exact_divide(BigInt(a + 1) * binomial(m, n), m);
}

Series fine_series(int k, int r, std::size_t order) {
  if (k < 2 || r < 1 || r > k - 1) throw Error(Errc::BadParams, "need k >= 2 and 1 <= r <= k-1");
  const Series c = ps_fuss_catalan(k, order);
  const Series den = Series::constant(1) + ps_pow(c, static_cast<unsigned>(k - r)).shifted(1);
  return ps_div(c, den);
}

}  // namespace motzkin
