#include <cstdint>
#include <stdexcept>

#include <doctest.h>

#include "barcore/number_theory.hpp"
#include "barcore/signed_paths.hpp"

using namespace barcore;

namespace {

// Walks the column and counts red squares one by one.
std::int64_t red_count_oracle(std::int64_t x, std::int64_t y) {
    std::int64_t count = 0;
    for (std::int64_t j = 1; j <= y; ++j)
        if ((x + j) % 2 == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("red_count_column on pinned values") {
    CHECK(red_count_column(1, 1) == 1);
    CHECK(red_count_column(2, 3) == 1);
    CHECK(red_count_column(3, 5) == 3);
    CHECK(red_count_column(4, 0) == 0);
    CHECK_THROWS_AS(red_count_column(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(red_count_column(1, -1), std::invalid_argument);
}

TEST_CASE("red_count_column matches the cell-walking oracle") {
    for (std::int64_t x = 1; x <= 20; ++x)
        for (std::int64_t y = 0; y <= 20; ++y)
            CHECK(red_count_column(x, y) == red_count_oracle(x, y));
}

TEST_CASE("d_recurrence on pinned values") {
    CHECK(d_recurrence(0, 7) == 1);
    CHECK(d_recurrence(7, 0) == 1);
    CHECK(d_recurrence(1, 1) == 0);
    CHECK(d_recurrence(2, 2) == 2);
    CHECK_THROWS_AS(d_recurrence(-1, 0), std::invalid_argument);
}

TEST_CASE("d_closed_form on pinned values") {
    CHECK(d_closed_form(3, 2) == -2);  // x=2k+1, y=2l with k=l=1
    CHECK(d_closed_form(2, 3) == 2);
    CHECK(d_closed_form(5, 7) == 0);
    CHECK(d_closed_form(2, 1) == 1);
    CHECK(d_closed_form(3, 1) == 0);
    CHECK(d_closed_form(8, 6) == 35);
    CHECK(d_closed_form(0, 0) == 1);
}

TEST_CASE("d_direct on pinned values and its guard") {
    CHECK(d_direct(0, 0) == 1);
    CHECK(d_direct(1, 1) == 0);
    CHECK(d_direct(2, 1) == 1);
    CHECK_THROWS_AS(d_direct(14, 13), std::invalid_argument);
    CHECK_THROWS_AS(d_direct(-1, 2), std::invalid_argument);
}

TEST_CASE("closed form, recurrence, and direct enumeration agree for x,y <= 12") {
    for (std::int64_t x = 0; x <= 12; ++x)
        for (std::int64_t y = 0; y <= 12; ++y) {
            const SignedCount closed = d_closed_form(x, y);
            CHECK(closed == d_recurrence(x, y));
            CHECK(closed == d_direct(x, y));
            if (x % 2 == 1 && y % 2 == 1) CHECK(closed == 0);
        }
}

TEST_CASE("D is bounded by the path count, sharply only on the axes") {
    for (std::int64_t x = 0; x <= 12; ++x)
        for (std::int64_t y = 0; y <= 12; ++y) {
            const SignedCount d = d_closed_form(x, y);
            const BigInt bound = binomial(x + y, x);
            CHECK(abs(d) <= bound);
            if (x > 0 && y > 0) CHECK(abs(d) < bound);
        }
}

TEST_CASE("consolidated even-y form matches the case list") {
    for (std::int64_t x = 0; x <= 24; ++x)
        for (std::int64_t y = 0; y <= 24; y += 2) {
            const int sign = (x * y / 2) % 2 ? -1 : 1;
            CHECK(d_closed_form(x, y) == sign * binomial(x / 2 + y / 2, y / 2));
        }
}
