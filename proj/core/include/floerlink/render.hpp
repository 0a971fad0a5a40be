#pragma once

#include <string>

#include "floerlink/lattice.hpp"
#include "floerlink/laurent.hpp"

namespace floerlink {

/// Pretty-print a polynomial in variables t1..tn (plain t for n = 1),
/// half-integer exponents shown as t^(k/2), terms in descending
/// lexicographic exponent order.
std::string render_poly(const LaurentPoly& p);

/// Render H (use_H) or h values on the box [-box, box]^n.
/// For n = 2 the output is a grid with s1 increasing rightward and s2
/// increasing upward, row and column index headers included:
///
///  s2\s1  -2  -1   0   1   2
///    2     2   1   0   0   0
///    ...
///
/// For n = 1 a single labeled row; for n >= 3 one "(s) = v" line per
/// nonzero value. This layout is frozen: tests compare byte-for-byte.
std::string render_values(const HModel& m, bool use_H, int box);

}  // namespace floerlink
