#include "barcore/number_theory.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace barcore {

int jacobi_symbol(std::int64_t upper, std::int64_t lower) {
    if (lower <= 0 || lower % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: lower argument must be odd and positive");

    std::int64_t a = upper % lower;
    if (a < 0) a += lower;
    std::int64_t n = lower;
    int result = 1;

    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            // (2/n) = -1 iff n = 3, 5 (mod 8)
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        // reciprocity: flip iff both are 3 (mod 4)
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int jacobi_floor_sum(std::int64_t s, std::int64_t t) {
    if (s < 1 || s % 2 == 0) throw std::invalid_argument("jacobi_floor_sum: s must be odd and >= 1");
    if (t <= 1 || t % 2 == 0) throw std::invalid_argument("jacobi_floor_sum: t must be odd and > 1");
    if (std::gcd(s, t) != 1) throw std::invalid_argument("jacobi_floor_sum: s and t must be coprime");

    // Only the parity of the sum matters.
    int parity = 0;
    for (std::int64_t i = 1; i <= (t - 1) / 2; ++i) {
        const auto q = static_cast<__int128>(i) * s / t;
        parity ^= static_cast<int>(q & 1);
    }
    return parity ? -1 : 1;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace barcore
