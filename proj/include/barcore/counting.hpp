#pragma once

#include <cstdint>
#include <optional>

#include "barcore/number_theory.hpp"

namespace barcore {

// Results of the independent counting routes for one (s,t) pair.
struct CountReport {
    std::int64_t s = 0;
    std::int64_t t = 0;
    BigInt total;
    BigInt even_closed_form;
    BigInt even_via_paths;
    std::optional<BigInt> even_brute_force;  // populated only when the oracle ran
    bool agreement = false;                  // all populated even-counts coincide
};

// C(m+n, n) with m = floor(s/2), n = floor(t/2).
BigInt count_all_cores(std::int64_t s, std::int64_t t);

// Closed form: (1/2) C(m+n,n) when s = t = 3 (mod 4); otherwise, with the pair
// ordered so the first argument is 1 (mod 4),
//   (1/2) ( C(m+n,n) + (-1)^{mn/2} (s/t) C(a+b,b) ).
// The division is always exact; a remainder would be a correctness bug.
BigInt count_even_cores(std::int64_t s, std::int64_t t);

// Path route: (1/2) ( C(m+n,n) + (-1)^{e_p0_count} D(n,m) ).
BigInt count_even_cores_via_paths(std::int64_t s, std::int64_t t);

// Self-associate spin characters of the double cover of S_n that are defect 0
// for both primes: equals count_even_cores(p, q).  Requires distinct odd primes.
BigInt count_sa_spin_characters(std::int64_t p, std::int64_t q);

// Spin characters of the double cover of A_n that are defect 0 for both
// primes: C(m+n,n) + count_even_cores(p,q), cross-checked against the direct
// (3/2)-binomial form.  Requires distinct odd primes.
BigInt count_an_spin_characters(std::int64_t p, std::int64_t q);

// Runs the closed-form and path routes, plus the brute-force partition oracle
// when requested (the caller is responsible for gating its cost).
CountReport make_count_report(std::int64_t s, std::int64_t t, bool with_brute_force);

}  // namespace barcore
