#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "barcore/bar_partition.hpp"

using namespace barcore;

namespace {

std::vector<BarPartition> collect(std::int64_t size) {
    std::vector<BarPartition> out;
    enumerate_bar_partitions(size, [&](const BarPartition& p) { out.push_back(p); });
    return out;
}

// Distinct-part partition counts by subset-sum DP over {1..n}.
std::int64_t q_oracle(std::int64_t n) {
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (std::int64_t part = 1; part <= n; ++part)
        for (std::int64_t j = n; j >= part; --j)
            ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - part)];
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("BarPartition validates its parts") {
    CHECK(BarPartition().empty());
    CHECK(BarPartition({4, 1}).parts() == std::vector<std::int64_t>{4, 1});
    CHECK_THROWS_AS(BarPartition({1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BarPartition({-2}), std::invalid_argument);
}

TEST_CASE("from_unsorted sorts but still rejects duplicates") {
    CHECK(BarPartition::from_unsorted({1, 4, 2}) == BarPartition({4, 2, 1}));
    CHECK_THROWS_AS(BarPartition::from_unsorted({2, 1, 2}), std::invalid_argument);
}

TEST_CASE("accessors and formatting") {
    const BarPartition p({9, 4, 2});
    CHECK(p.size() == 15);
    CHECK(p.length() == 3);
    CHECK(p.contains_part(4));
    CHECK_FALSE(p.contains_part(3));
    CHECK(p.to_string() == "[9,4,2]");
    CHECK(BarPartition().to_string() == "[]");
}

TEST_CASE("size_lex_less orders by size, then descending-lex") {
    CHECK(size_lex_less(BarPartition(), BarPartition({1})));
    CHECK(size_lex_less(BarPartition({6}), BarPartition({5, 1})));
    CHECK(size_lex_less(BarPartition({5, 1}), BarPartition({4, 2})));
    CHECK_FALSE(size_lex_less(BarPartition({4, 2}), BarPartition({4, 2})));
}

TEST_CASE("is_sbar_core on pinned values") {
    CHECK(is_sbar_core(BarPartition(), 3));
    CHECK_FALSE(is_sbar_core(BarPartition({3}), 3));
    CHECK(is_sbar_core(BarPartition({4, 1}), 3));  // 4-3=1 present, 3-1=2 absent
    CHECK(is_sbar_core(BarPartition({4, 1}), 7));
    CHECK_FALSE(is_sbar_core(BarPartition({5}), 3));     // 5-3=2 missing
    CHECK_FALSE(is_sbar_core(BarPartition({2, 1}), 3));  // 3-1=2 is a part
}

TEST_CASE("is_sbar_core rejects an invalid modulus") {
    CHECK_THROWS_AS(is_sbar_core(BarPartition(), 4), std::invalid_argument);
    CHECK_THROWS_AS(is_sbar_core(BarPartition(), 1), std::invalid_argument);
    CHECK_THROWS_AS(is_sbar_core(BarPartition(), -3), std::invalid_argument);
}

TEST_CASE("is_even_partition on pinned values") {
    CHECK(is_even_partition(BarPartition()));
    CHECK_FALSE(is_even_partition(BarPartition({2})));
    CHECK(is_even_partition(BarPartition({4, 2, 1})));
}

TEST_CASE("evenness matches the size-minus-length characterization") {
    std::mt19937 rng(7031);
    std::uniform_int_distribution<int> len_dist(0, 12);
    std::vector<std::int64_t> universe(60);
    std::iota(universe.begin(), universe.end(), 1);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::int64_t> parts;
        std::sample(universe.begin(), universe.end(), std::back_inserter(parts),
                    len_dist(rng), rng);
        const BarPartition p = BarPartition::from_unsorted(std::move(parts));
        CHECK(is_even_partition(p) == ((p.size() - p.length()) % 2 == 0));
    }
}

TEST_CASE("is_st_core on pinned values") {
    CHECK(is_st_core(BarPartition(), 3, 5));
    CHECK(is_st_core(BarPartition({2}), 3, 5));
    CHECK_FALSE(is_st_core(BarPartition({4, 1}), 3, 5));  // 5-4=1 is a part
}

TEST_CASE("enumerate_bar_partitions yields descending-lex order") {
    CHECK(collect(0) == std::vector<BarPartition>{BarPartition()});
    CHECK(collect(3) == std::vector<BarPartition>{BarPartition({3}), BarPartition({2, 1})});
    CHECK(collect(6) ==
          std::vector<BarPartition>{BarPartition({6}), BarPartition({5, 1}),
                                    BarPartition({4, 2}), BarPartition({3, 2, 1})});
    CHECK_THROWS_AS(enumerate_bar_partitions(-1, [](const BarPartition&) {}),
                    std::invalid_argument);
}

TEST_CASE("enumeration counts match the distinct-part DP oracle") {
    for (std::int64_t n = 0; n <= 16; ++n) {
        const auto all = collect(n);
        CHECK(static_cast<std::int64_t>(all.size()) == q_oracle(n));
        for (const BarPartition& p : all) {
            CHECK(p.size() == n);
            CHECK(std::is_sorted(p.parts().begin(), p.parts().end(),
                                 std::greater<>()));
        }
    }
    CHECK(q_oracle(10) == 10);
}

TEST_CASE("brute_force_st_cores on pinned values") {
    CHECK(brute_force_st_cores(3, 5, 2) ==
          std::vector<BarPartition>{BarPartition(), BarPartition({1}), BarPartition({2})});
    CHECK(brute_force_st_cores(3, 7, 5) ==
          std::vector<BarPartition>{BarPartition(), BarPartition({1}), BarPartition({2}),
                                    BarPartition({4, 1})});
    CHECK(brute_force_st_cores(3, 5, 0) == std::vector<BarPartition>{BarPartition()});
}

TEST_CASE("brute_force_st_cores rejects invalid pairs") {
    CHECK_THROWS_AS(brute_force_st_cores(3, 9, 5), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_st_cores(4, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_st_cores(3, 5, -1), std::invalid_argument);
}

TEST_CASE("brute_force_st_cores is symmetric and self-consistent") {
    const auto forward = brute_force_st_cores(3, 5, 10);
    CHECK(forward == brute_force_st_cores(5, 3, 10));
    const auto cores = brute_force_st_cores(5, 7, 20);
    CHECK(cores == brute_force_st_cores(7, 5, 20));
    CHECK(std::is_sorted(cores.begin(), cores.end(), size_lex_less));
    for (const BarPartition& p : cores) {
        CHECK(is_sbar_core(p, 5));
        CHECK(is_sbar_core(p, 7));
    }
}
