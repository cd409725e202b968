#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace barcore {

// Partition into strictly decreasing positive parts.  Because all parts are
// distinct it doubles as a finite set of integers, and membership queries are
// part of its interface.
class BarPartition {
public:
    BarPartition() = default;  // the empty partition
    explicit BarPartition(std::vector<std::int64_t> parts);

    // Sorts, then applies the same validation as the main constructor
    // (duplicates still rejected).
    static BarPartition from_unsorted(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    bool contains_part(std::int64_t a) const;

    std::int64_t size() const;  // sum of parts
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;  // "[4,1]", "[]"

    friend bool operator==(const BarPartition&, const BarPartition&) = default;

private:
    std::vector<std::int64_t> parts_;  // strictly decreasing, all > 0
};

// Ascending by size, then descending-lex on part lists; every enumeration and
// listing in this library uses this order.
bool size_lex_less(const BarPartition& a, const BarPartition& b);

// The combinatorial bar-core test: no part divisible by s; a - s present for
// every part a > s; s - a absent for every part a < s.
bool is_sbar_core(const BarPartition& lambda, std::int64_t s);

// Even iff an even number of parts are even; equivalently size - length even.
bool is_even_partition(const BarPartition& lambda);

bool is_st_core(const BarPartition& lambda, std::int64_t s, std::int64_t t);

// Yields every partition of `size` into distinct parts exactly once, in
// descending-lex order: 6 -> [6], [5,1], [4,2], [3,2,1].
void enumerate_bar_partitions(std::int64_t size,
                              const std::function<void(const BarPartition&)>& yield);

// All (s,t)-bar-cores of every size 0..max_size, ordered by size then
// descending-lex.  This is the brute-force oracle; it is complete exactly when
// max_size covers the Yin-half sum of the (s,t) diagram.
std::vector<BarPartition> brute_force_st_cores(std::int64_t s, std::int64_t t,
                                               std::int64_t max_size);

void validate_bar_modulus(std::int64_t s);              // odd, > 1
void validate_odd_pair(std::int64_t s, std::int64_t t); // both odd > 1, coprime

}  // namespace barcore
