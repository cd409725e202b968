#include "barcore/counting.hpp"

#include <stdexcept>
#include <utility>

#include "barcore/bar_partition.hpp"
#include "barcore/signed_paths.hpp"
#include "barcore/yin_yang.hpp"

namespace barcore {

namespace {

BigInt exact_half(const BigInt& value, const char* what) {
    if (value % 2 != 0)
        throw std::logic_error(std::string(what) + ": dividend is odd");
    return value / 2;
}

// The mixed-residue branch evaluated verbatim with s = 1 (mod 4) first.
BigInt mixed_branch(std::int64_t s, std::int64_t t) {
    const std::int64_t m = s / 2, n = t / 2, a = s / 4, b = t / 4;
    // s = 1 (mod 4) makes m even, so mn/2 = (m/2)*n exactly.
    const int sign = (m / 2) % 2 && n % 2 ? -1 : 1;
    const BigInt bracket =
        binomial(m + n, n) + sign * jacobi_symbol(s, t) * binomial(a + b, b);
    return exact_half(bracket, "count_even_cores");
}

void require_distinct_odd_primes(std::int64_t p, std::int64_t q) {
    if (!is_odd_prime(p) || !is_odd_prime(q))
        throw std::invalid_argument("spin-character counts require odd primes");
    if (p == q)
        throw std::invalid_argument("spin-character counts require distinct primes");
}

}  // namespace

BigInt count_all_cores(std::int64_t s, std::int64_t t) {
    validate_odd_pair(s, t);
    return binomial(s / 2 + t / 2, t / 2);
}

BigInt count_even_cores(std::int64_t s, std::int64_t t) {
    validate_odd_pair(s, t);
    if (s % 4 == 3 && t % 4 == 3)
        return exact_half(count_all_cores(s, t), "count_even_cores");
    if (s % 4 != 1) std::swap(s, t);
    const BigInt result = mixed_branch(s, t);
    if (t % 4 == 1 && mixed_branch(t, s) != result)
        throw std::logic_error("count_even_cores: branch is not symmetric in (s,t)");
    return result;
}

BigInt count_even_cores_via_paths(std::int64_t s, std::int64_t t) {
    const YinYangDiagram d(s, t);
    const int sign = d.e_p0_count() % 2 ? -1 : 1;
    const BigInt bracket = d.total_paths() + sign * d_closed_form(d.n(), d.m());
    return exact_half(bracket, "count_even_cores_via_paths");
}

BigInt count_sa_spin_characters(std::int64_t p, std::int64_t q) {
    require_distinct_odd_primes(p, q);
    return count_even_cores(p, q);
}

BigInt count_an_spin_characters(std::int64_t p, std::int64_t q) {
    require_distinct_odd_primes(p, q);
    const BigInt via_even = count_all_cores(p, q) + count_even_cores(p, q);

    // Independent route: (3/2) C(m+n,n) plus the half-correction term.
    BigInt bracket = 3 * count_all_cores(p, q);
    if (!(p % 4 == 3 && q % 4 == 3)) {
        std::int64_t s = p, t = q;
        if (s % 4 != 1) std::swap(s, t);
        const std::int64_t m = s / 2, n = t / 2, a = s / 4, b = t / 4;
        const int sign = (m / 2) % 2 && n % 2 ? -1 : 1;
        bracket += sign * jacobi_symbol(s, t) * binomial(a + b, b);
    }
    const BigInt direct = exact_half(bracket, "count_an_spin_characters");

    if (direct != via_even)
        throw std::logic_error("count_an_spin_characters: the two evaluations disagree");
    return direct;
}

CountReport make_count_report(std::int64_t s, std::int64_t t, bool with_brute_force) {
    CountReport report;
    report.s = s;
    report.t = t;
    report.total = count_all_cores(s, t);
    report.even_closed_form = count_even_cores(s, t);
    report.even_via_paths = count_even_cores_via_paths(s, t);
    if (with_brute_force) {
        const YinYangDiagram d(s, t);
        const BigInt bound = d.yin_sum();
        if (!bound.fits_slong_p())
            throw std::invalid_argument("brute-force oracle bound does not fit a machine word");
        BigInt evens = 0;
        for (const BarPartition& core :
             brute_force_st_cores(s, t, bound.get_si()))
            if (is_even_partition(core)) ++evens;
        report.even_brute_force = evens;
    }
    report.agreement = report.even_closed_form == report.even_via_paths &&
                       (!report.even_brute_force ||
                        *report.even_brute_force == report.even_closed_form);
    return report;
}

}  // namespace barcore
