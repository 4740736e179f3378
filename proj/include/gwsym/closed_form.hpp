#pragma once

#include "gwsym/gw.hpp"

namespace gwsym {

// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1)/n! for any integer x
// (negative upper argument included), n >= 0.
Int binom_gen(const Int& x, unsigned n);

// Euler characteristic of a smooth projective curve of genus g: (1 - g) * H.
GWElement chi_curve(std::int64_t g, const FieldDesc& F = FieldDesc::Q());

// Closed formula for the quadratic Euler characteristic of Sym^n of a genus-g curve.
// Even n = 2m:  sum_{i<=m} C(g, i) <(-1)^i>  +  (C(2g-2, n) - sum_{i<=m} C(g, i)) / 2 * H.
// Odd n:       -C(2g-2, n) / 2 * H.
// Requires g >= 0, n >= 1. NonIntegralCoefficient if a half-integer multiplicity appears
// (never does; the assertion guards the arithmetic).
GWElement chi_sym_closed(std::int64_t g, std::int64_t n, const FieldDesc& F = FieldDesc::Q());

// Same value in the plus/minus presentation: (p, m) with chi = p<1> + m<-1>, via
// p, m = (C(2g-2, n) +- (-1)^(n/2) C(g-1, n/2)) / 2 for even n, p = m = -C(2g-2, n)/2 odd.
std::pair<Int, Int> chi_sym_closed_pm(std::int64_t g, std::int64_t n);

// Rank of chi(Sym^n C): (-1)^n C(2g-2, n); vanishes for g >= 1, n > 2g-2.
Int rank_formula(std::int64_t g, std::int64_t n);

}  // namespace gwsym
