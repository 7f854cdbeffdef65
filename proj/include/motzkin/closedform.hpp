#pragma once

#include <cstddef>

#include "motzkin/bigint.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// C(n, k); zero when k < 0 or k > n (and for n < 0).
BigInt binomial(long n, long k);

/// C(kn+1, n) / (kn+1). Throws BadParams unless k >= 2 and n >= 0.
BigInt fuss_catalan_number(int k, int n);

/// Depth-a k-Dyck paths returning to 0: (a+1)/(kn+a+1) * C(kn+a+1, n).
BigInt prodinger_count(int k, int a, int n);

/// C_k(t) / (1 + t C_k(t)^{k-r}) modulo t^{N+1}; the (k,r)-Fine numbers.
Series fine_series(int k, int r, std::size_t order);

/// q = num / den, throwing InexactDivision when the remainder is nonzero.
BigInt exact_divide(const BigInt& num, const BigInt& den);

}  // namespace motzkin
