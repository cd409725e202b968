#include "barcore/signed_paths.hpp"

#include <stdexcept>
#include <vector>

#include "barcore/lattice_path.hpp"

namespace barcore {

std::int64_t red_count_column(std::int64_t x, std::int64_t y) {
    if (x < 1 || y < 0)
        throw std::invalid_argument("red_count_column: require x >= 1, y >= 0");
    std::int64_t count = y / 2;
    if (x % 2 == 1 && y % 2 == 1) ++count;
    return count;
}

SignedCount d_recurrence(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0)
        throw std::invalid_argument("d_recurrence: coordinates must be nonnegative");
    // row[i] holds D(i, j) while sweeping j upward; row 0 / column 0 are all 1.
    std::vector<SignedCount> row(static_cast<std::size_t>(x) + 1, 1);
    for (std::int64_t j = 1; j <= y; ++j) {
        for (std::int64_t i = 1; i <= x; ++i) {
            const int sign = red_count_column(i, j) % 2 ? -1 : 1;
            row[static_cast<std::size_t>(i)] += sign * row[static_cast<std::size_t>(i) - 1];
        }
    }
    return row[static_cast<std::size_t>(x)];
}

SignedCount d_closed_form(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0)
        throw std::invalid_argument("d_closed_form: coordinates must be nonnegative");
    const std::int64_t k = x / 2, l = y / 2;
    if (x % 2 == 1 && y % 2 == 1) return 0;
    SignedCount value = binomial(k + l, k);
    if (x % 2 == 1 && l % 2 == 1) value = -value;
    return value;
}

SignedCount d_direct(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0)
        throw std::invalid_argument("d_direct: coordinates must be nonnegative");
    if (x + y > 26)
        throw std::invalid_argument("d_direct: enumeration guard requires x + y <= 26");
    SignedCount total = 0;
    for_each_path(x, y, [&](const LatticePath& p) {
        std::int64_t reds = 0;
        const auto heights = p.heights();
        for (std::int64_t i = 1; i <= x; ++i)
            reds += red_count_column(i, heights[static_cast<std::size_t>(i) - 1]);
        total += reds % 2 ? -1 : 1;
    });
    return total;
}

}  // namespace barcore
