#pragma once

#include <cstdint>

#include "barcore/number_theory.hpp"

namespace barcore {

// Even-minus-odd path tally; always bounded by C(x+y, x) in magnitude.
using SignedCount = BigInt;

// Number of red squares (i+j even, upper-right-corner indexing) in column x
// among rows 1..y: floor(y/2), plus one when x and y are both odd.
std::int64_t red_count_column(std::int64_t x, std::int64_t y);

// D(x,y) by the recurrence D(x,y) = D(x,y-1) + (-1)^{red_count_column(x,y)} D(x-1,y),
// with D = 1 on both axes; evaluated bottom-up over an (x+1)x(y+1) table.
SignedCount d_recurrence(std::int64_t x, std::int64_t y);

// D(x,y) by the four-case closed form:
//   x=2k,   y=2l   -> C(k+l,k)        x=2k,   y=2l+1 -> C(k+l,k)
//   x=2k+1, y=2l   -> (-1)^l C(k+l,k) x=2k+1, y=2l+1 -> 0
SignedCount d_closed_form(std::int64_t x, std::int64_t y);

// D(x,y) by direct enumeration of all C(x+y,x) paths, each signed by the
// parity of the red squares below it.  Guarded: requires x + y <= 26.
SignedCount d_direct(std::int64_t x, std::int64_t y);

}  // namespace barcore
