#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "barcore/bar_partition.hpp"
#include "barcore/number_theory.hpp"

namespace barcore {

// Exhaustive sweeps refuse pairs with more than this many lattice paths.
inline constexpr std::int64_t kDefaultPathBudget = 10'000'000;

// Raised when C(m+n,n) exceeds the enumeration budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Findings for one (s,t) pair: is there a single core containing every even
// core, and how large can an even core get?
struct ConjectureReport {
    std::int64_t s = 0;
    std::int64_t t = 0;
    BigInt even_core_count;
    BigInt max_even_size;
    std::optional<BarPartition> maximal_container;  // size-minimal witness
    std::optional<bool> container_is_even;
    bool conjecture_holds = false;
};

// Every (s,t)-bar-core via the path bijection, ordered by size then
// descending-lex (the library's canonical order).
std::vector<BarPartition> all_st_cores(std::int64_t s, std::int64_t t,
                                       std::int64_t budget = kDefaultPathBudget);

// The cores whose paths share the boundary path's parity, same order.
std::vector<BarPartition> all_even_cores(std::int64_t s, std::int64_t t,
                                         std::int64_t budget = kDefaultPathBudget);

// Young-diagram containment: inner fits componentwise inside outer.
bool contains(const BarPartition& outer, const BarPartition& inner);

// Searches every core (even or not) for one containing all even cores;
// reports a size-minimal witness (ties broken lexicographically) if any.
ConjectureReport find_maximal_container(std::int64_t s, std::int64_t t,
                                        std::int64_t budget = kDefaultPathBudget);

}  // namespace barcore
