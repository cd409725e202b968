#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace barcore {

// Exact arbitrary-precision integer; every count in this library is one.
using BigInt = mpz_class;

// Jacobi symbol (upper / lower) in {-1, 0, +1}.  `lower` must be odd and
// positive; `upper` may be any integer (reduced mod lower first).  Returns 0
// exactly when the arguments share a common factor.
int jacobi_symbol(std::int64_t upper, std::int64_t lower);

// (-1)^{sum_{i=1}^{(t-1)/2} floor(i*s/t)} for odd coprime s >= 1, t > 1.
// Agrees with jacobi_symbol(s, t) on this domain.
int jacobi_floor_sum(std::int64_t s, std::int64_t t);

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Deterministic trial division; 2 is not an odd prime.
bool is_odd_prime(std::int64_t p);

}  // namespace barcore
