#include "barcore/yin_yang.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace barcore {

namespace {

// Even-valued cells in column x are those with x+y even; this counts them
// among y = 1..h without walking the column.
std::int64_t even_values_in_column(std::int64_t x, std::int64_t h) {
    return x % 2 == 0 ? h / 2 : (h + 1) / 2;
}

void require_valid_path(const YinYangDiagram& d, const LatticePath& p) {
    if (p.right_count() != d.n() || p.up_count() != d.m())
        throw std::invalid_argument("path endpoint does not match the diagram grid");
}

}  // namespace

YinYangDiagram::YinYangDiagram(std::int64_t s, std::int64_t t) : s_(s), t_(t) {
    validate_odd_pair(s, t);
    m_ = s / 2;
    n_ = t / 2;
    a_ = s / 4;
    b_ = t / 4;
}

std::int64_t YinYangDiagram::cell_value(std::int64_t x, std::int64_t y) const {
    if (x < 1 || x > n_ || y < 1 || y > m_)
        throw std::out_of_range("cell index outside the diagram grid");
    return std::abs(s_ * x - t_ * y);
}

bool YinYangDiagram::is_yang(std::int64_t x, std::int64_t y) const {
    if (x < 1 || x > n_ || y < 1 || y > m_)
        throw std::out_of_range("cell index outside the diagram grid");
    return s_ * x - t_ * y > 0;
}

std::int64_t YinYangDiagram::yang_height(std::int64_t x) const {
    if (x < 1 || x > n_)
        throw std::out_of_range("column index outside the diagram grid");
    return s_ * x / t_;
}

LatticePath YinYangDiagram::boundary_path() const {
    std::vector<std::int64_t> heights(static_cast<std::size_t>(n_));
    for (std::int64_t x = 1; x <= n_; ++x)
        heights[static_cast<std::size_t>(x) - 1] = yang_height(x);
    return LatticePath::from_heights(heights, m_);
}

std::int64_t YinYangDiagram::e_p0_count() const {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x <= n_; ++x)
        count += even_values_in_column(x, yang_height(x));
    return count;
}

BigInt YinYangDiagram::yin_sum() const {
    // Column x holds Yin cells y = yang_height(x)+1 .. m with value ty - sx.
    BigInt total = 0;
    for (std::int64_t x = 1; x <= n_; ++x) {
        const std::int64_t lo = yang_height(x) + 1;
        if (lo > m_) continue;
        const std::int64_t count = m_ - lo + 1;
        BigInt y_sum = BigInt(lo + m_) * count / 2;
        total += BigInt(t_) * y_sum - BigInt(s_) * x * count;
    }
    return total;
}

BigInt YinYangDiagram::total_paths() const { return binomial(m_ + n_, n_); }

std::vector<Cell> region_below(const YinYangDiagram& d, const LatticePath& p) {
    require_valid_path(d, p);
    std::vector<Cell> cells;
    const auto heights = p.heights();
    for (std::int64_t x = 1; x <= d.n(); ++x)
        for (std::int64_t y = 1; y <= heights[static_cast<std::size_t>(x) - 1]; ++y)
            cells.push_back({x, y, d.cell_value(x, y)});
    return cells;
}

BarPartition path_to_core(const YinYangDiagram& d, const LatticePath& p) {
    const auto values_of = [&](const LatticePath& path) {
        std::vector<std::int64_t> values;
        for (const Cell& c : region_below(d, path)) values.push_back(c.value);
        std::sort(values.begin(), values.end());
        return values;
    };
    const auto lp = values_of(p);
    const auto l0 = values_of(d.boundary_path());
    std::vector<std::int64_t> parts;
    std::set_symmetric_difference(lp.begin(), lp.end(), l0.begin(), l0.end(),
                                  std::back_inserter(parts));
    std::reverse(parts.begin(), parts.end());
    return BarPartition(std::move(parts));
}

Parity path_parity(const YinYangDiagram& d, const LatticePath& p) {
    require_valid_path(d, p);
    std::int64_t count = 0;
    const auto heights = p.heights();
    for (std::int64_t x = 1; x <= d.n(); ++x)
        count += even_values_in_column(x, heights[static_cast<std::size_t>(x) - 1]);
    return count % 2 ? Parity::Odd : Parity::Even;
}

std::string render_diagram_text(const YinYangDiagram& d) {
    const std::int64_t max_value =
        std::max(d.cell_value(1, d.m()), d.cell_value(d.n(), 1));
    const std::size_t width = std::to_string(max_value).size();

    std::string out = "Yin-Yang diagram s=" + std::to_string(d.s()) +
                      " t=" + std::to_string(d.t()) + " (m=" + std::to_string(d.m()) +
                      " n=" + std::to_string(d.n()) + " a=" + std::to_string(d.a()) +
                      " b=" + std::to_string(d.b()) + ")\n";
    for (std::int64_t y = d.m(); y >= 1; --y) {
        std::string row;
        for (std::int64_t x = 1; x <= d.n(); ++x) {
            std::string token = std::to_string(d.cell_value(x, y));
            token.insert(0, width - token.size(), ' ');
            token += d.is_yang(x, y) ? ' ' : '*';
            if (x > 1) row += ' ';
            row += token;
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace barcore
