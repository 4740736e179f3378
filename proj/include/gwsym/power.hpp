#pragma once

#include <vector>

#include "gwsym/gw.hpp"

namespace gwsym {

// Truncated power series with GW coefficients, coeffs[k] the coefficient of t^k.
struct GWPowerSeries {
  FieldDesc field = FieldDesc::Q();
  std::vector<GWElement> coeffs;

  std::size_t order() const { return coeffs.size(); }  // truncation length
  const GWElement& at(std::size_t k) const { return coeffs[k]; }
};

GWPowerSeries series_mul(const GWPowerSeries& f, const GWPowerSeries& g);

// Multiplicative inverse of a series with constant term <1> (structurally), same
// truncation. BadConstantTerm otherwise.
GWPowerSeries series_inverse(const GWPowerSeries& f);

// n-th power-structure coefficient on a generator:
//   a_n(<a>) = <a^n> + n(n-1)/2 (<a> + <2> - <1> - <2a>),  a_0 = <1>, a_1 = <a>.
GWElement a_n_gen(const SquareClass& a, std::int64_t n);

// a_t(<a>) truncated after t^N.
GWPowerSeries a_series_gen(const SquareClass& a, std::size_t N);

// Power-structure coefficient a_n(x) for a virtual form x, via the truncated product
// prod_c a_t(<c>)^{m_c} with series inversion for negative multiplicities.
GWElement a_n(const GWElement& x, std::int64_t n);
GWPowerSeries a_series(const GWElement& x, std::size_t N);

// Closed form: a_n(-l H) = (-1)^n sum_i C(l, i) C(l, n-i) <-1>^(n-i), l >= 0.
GWElement a_n_neg_lH(std::int64_t l, std::int64_t n, const FieldDesc& F = FieldDesc::Q());

// Same value as the t^n coefficient of (<1> - H t + <-1> t^2)^l.
GWElement a_n_neg_lH_poly(std::int64_t l, std::int64_t n, const FieldDesc& F = FieldDesc::Q());

}  // namespace gwsym
