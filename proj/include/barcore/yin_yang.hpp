#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barcore/bar_partition.hpp"
#include "barcore/lattice_path.hpp"
#include "barcore/number_theory.hpp"

namespace barcore {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

// Grid cell identified by its upper-right corner (x,y), 1-based.
struct Cell {
    std::int64_t x;
    std::int64_t y;
    std::int64_t value;  // |s*x - t*y|, never zero by coprimality

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Immutable descriptor of the m x n grid of values |sx - ty| for odd coprime
// (s,t); cells are computed on demand, the grid itself is never stored.
class YinYangDiagram {
public:
    YinYangDiagram(std::int64_t s, std::int64_t t);

    std::int64_t s() const { return s_; }
    std::int64_t t() const { return t_; }
    std::int64_t m() const { return m_; }  // rows,    floor(s/2)
    std::int64_t n() const { return n_; }  // columns, floor(t/2)
    std::int64_t a() const { return a_; }  // floor(s/4)
    std::int64_t b() const { return b_; }  // floor(t/4)

    std::int64_t cell_value(std::int64_t x, std::int64_t y) const;  // |sx - ty|
    bool is_yang(std::int64_t x, std::int64_t y) const;             // sx - ty > 0

    // Height of the Yang region in column x: cells (x,y) with y <= floor(sx/t)
    // are exactly the Yang cells of that column.
    std::int64_t yang_height(std::int64_t x) const;

    // The staircase separating Yin from Yang; its below-region is the Yang half.
    LatticePath boundary_path() const;

    std::int64_t e_p0_count() const;  // even values in the Yang half
    BigInt yin_sum() const;           // sum of all Yin-half values
    BigInt total_paths() const;       // C(m+n, n)

private:
    std::int64_t s_, t_, m_, n_, a_, b_;
};

// Cells strictly below the path, column by column (x ascending, y ascending).
std::vector<Cell> region_below(const YinYangDiagram& d, const LatticePath& p);

// The bijection path -> core: part set is the symmetric difference of the
// below-region value sets of p and of the boundary path.
BarPartition path_to_core(const YinYangDiagram& d, const LatticePath& p);

// Parity of the number of even-valued cells below the path.
Parity path_parity(const YinYangDiagram& d, const LatticePath& p);

// Text grid, rows top (y=m) to bottom (y=1); Yin cells marked with '*'.
std::string render_diagram_text(const YinYangDiagram& d);

}  // namespace barcore
