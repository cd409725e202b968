#include <cstdint>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "barcore/lattice_path.hpp"
#include "barcore/number_theory.hpp"

using namespace barcore;

TEST_CASE("first path is all Rights then all Ups") {
    CHECK(LatticePath::first(2, 1).to_string() == "RRU");
    CHECK(LatticePath::first(0, 3).to_string() == "UUU");
    CHECK(LatticePath::first(0, 0).to_string().empty());
}

TEST_CASE("constructor validates step counts") {
    CHECK_THROWS_AS(LatticePath({Step::Right}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath({}, -1, 0), std::invalid_argument);
    CHECK_NOTHROW(LatticePath({Step::Up, Step::Right}, 1, 1));
}

TEST_CASE("parse round-trips") {
    const LatticePath p = LatticePath::parse("RUR");
    CHECK(p.right_count() == 2);
    CHECK(p.up_count() == 1);
    CHECK(p.to_string() == "RUR");
    CHECK_THROWS_AS(LatticePath::parse("RXU"), std::invalid_argument);
}

TEST_CASE("heights count Ups before each Right") {
    CHECK(LatticePath::parse("RUR").heights() == std::vector<std::int64_t>{0, 1});
    CHECK(LatticePath::parse("UURRU").heights() == std::vector<std::int64_t>{2, 2});
    CHECK(LatticePath::parse("UUU").heights().empty());
}

TEST_CASE("from_heights inverts heights") {
    const std::vector<std::int64_t> h{0, 1, 1, 3};
    const LatticePath p = LatticePath::from_heights(h, 4);
    CHECK(p.to_string() == "RURRUURU");
    CHECK(p.heights() == h);
    CHECK_THROWS_AS(LatticePath::from_heights({2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::from_heights({4}, 3), std::invalid_argument);
}

TEST_CASE("iteration is lexicographic with Right < Up") {
    std::vector<std::string> seen;
    for_each_path(2, 1, [&](const LatticePath& p) { seen.push_back(p.to_string()); });
    CHECK(seen == std::vector<std::string>{"RRU", "RUR", "URR"});
}

TEST_CASE("iteration visits exactly C(n+m, n) distinct paths") {
    for (std::int64_t n = 0; n <= 5; ++n)
        for (std::int64_t m = 0; m <= 5; ++m) {
            std::vector<std::string> seen;
            for_each_path(n, m, [&](const LatticePath& p) {
                CHECK(p.right_count() == n);
                CHECK(p.up_count() == m);
                if (!seen.empty()) CHECK(seen.back() < p.to_string());
                seen.push_back(p.to_string());
            });
            CHECK(BigInt(static_cast<long>(seen.size())) == binomial(n + m, n));
        }
}
