#include "barcore/bar_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace barcore {

BarPartition::BarPartition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("BarPartition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("BarPartition: parts must be strictly decreasing");
    }
}

BarPartition BarPartition::from_unsorted(std::vector<std::int64_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return BarPartition(std::move(parts));
}

bool BarPartition::contains_part(std::int64_t a) const {
    return std::binary_search(parts_.begin(), parts_.end(), a, std::greater<>());
}

std::int64_t BarPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string BarPartition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

bool size_lex_less(const BarPartition& a, const BarPartition& b) {
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() > b.parts();  // descending-lex within a size class
}

void validate_bar_modulus(std::int64_t s) {
    if (s <= 1 || s % 2 == 0)
        throw std::invalid_argument("bar modulus must be an odd integer > 1");
}

void validate_odd_pair(std::int64_t s, std::int64_t t) {
    validate_bar_modulus(s);
    validate_bar_modulus(t);
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("s and t must be coprime");
}

bool is_sbar_core(const BarPartition& lambda, std::int64_t s) {
    validate_bar_modulus(s);
    for (const std::int64_t a : lambda.parts()) {
        if (a % s == 0) return false;
        if (a > s && !lambda.contains_part(a - s)) return false;
        if (a < s && lambda.contains_part(s - a)) return false;
    }
    return true;
}

bool is_even_partition(const BarPartition& lambda) {
    std::int64_t even_parts = 0;
    for (const std::int64_t a : lambda.parts())
        if (a % 2 == 0) ++even_parts;
    return even_parts % 2 == 0;
}

bool is_st_core(const BarPartition& lambda, std::int64_t s, std::int64_t t) {
    return is_sbar_core(lambda, s) && is_sbar_core(lambda, t);
}

namespace {

void enumerate_rec(std::int64_t remaining, std::int64_t max_part,
                   std::vector<std::int64_t>& acc,
                   const std::function<void(const BarPartition&)>& yield) {
    if (remaining == 0) {
        yield(BarPartition(acc));
        return;
    }
    // Largest feasible first part first gives descending-lex order overall.
    for (std::int64_t first = std::min(remaining, max_part); first >= 1; --first) {
        acc.push_back(first);
        enumerate_rec(remaining - first, first - 1, acc, yield);
        acc.pop_back();
    }
}

}  // namespace

void enumerate_bar_partitions(std::int64_t size,
                              const std::function<void(const BarPartition&)>& yield) {
    if (size < 0) throw std::invalid_argument("enumerate_bar_partitions: size must be >= 0");
    std::vector<std::int64_t> acc;
    enumerate_rec(size, size, acc, yield);
}

std::vector<BarPartition> brute_force_st_cores(std::int64_t s, std::int64_t t,
                                               std::int64_t max_size) {
    validate_odd_pair(s, t);
    if (max_size < 0) throw std::invalid_argument("brute_force_st_cores: max_size must be >= 0");

    std::vector<BarPartition> cores;
    for (std::int64_t n = 0; n <= max_size; ++n) {
        enumerate_bar_partitions(n, [&](const BarPartition& p) {
            if (is_st_core(p, s, t)) cores.push_back(p);
        });
    }
    return cores;
}

}  // namespace barcore
