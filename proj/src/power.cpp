#include "gwsym/power.hpp"

#include "gwsym/closed_form.hpp"

namespace gwsym {

GWPowerSeries series_mul(const GWPowerSeries& f, const GWPowerSeries& g) {
  require_same_field(f.field, g.field, "series_mul");
  const std::size_t N = std::min(f.order(), g.order());
  GWPowerSeries r{f.field, {}};
  r.coeffs.assign(N, GWElement::zero(f.field));
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i <= k; ++i) r.coeffs[k] += f.coeffs[i] * g.coeffs[k - i];
  return r;
}

GWPowerSeries series_inverse(const GWPowerSeries& f) {
  if (f.order() == 0 || !(f.coeffs[0] == GWElement::unit(f.field)))
    throw Error(ErrorKind::BadConstantTerm, "series inversion needs constant term <1>");
  GWPowerSeries r{f.field, {}};
  r.coeffs.assign(f.order(), GWElement::zero(f.field));
  r.coeffs[0] = GWElement::unit(f.field);
  for (std::size_t k = 1; k < f.order(); ++k) {
    GWElement c = GWElement::zero(f.field);
    for (std::size_t i = 1; i <= k; ++i) c += f.coeffs[i] * r.coeffs[k - i];
    r.coeffs[k] = -c;
  }
  return r;
}

GWElement a_n_gen(const SquareClass& a, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::Domain, "a_n needs n >= 0");
  const FieldDesc& F = a.field();
  SquareClass an = n % 2 ? a : SquareClass::one(F);  // <a^n>
  GWElement r = GWElement::of_class(an);
  std::int64_t binom2 = n * (n - 1) / 2;
  if (binom2) {
    GWElement corr = GWElement::of_class(a);
    corr.add_class(SquareClass::of(F, Rat(2)), 1);
    corr.add_class(SquareClass::one(F), -1);
    corr.add_class(a * SquareClass::of(F, Rat(2)), -1);
    r += corr.scaled(binom2);
  }
  return r;
}

GWPowerSeries a_series_gen(const SquareClass& a, std::size_t N) {
  GWPowerSeries s{a.field(), {}};
  for (std::size_t k = 0; k <= N; ++k) s.coeffs.push_back(a_n_gen(a, static_cast<std::int64_t>(k)));
  return s;
}

GWPowerSeries a_series(const GWElement& x, std::size_t N) {
  const FieldDesc& F = x.field();
  GWPowerSeries r{F, {}};
  r.coeffs.assign(N + 1, GWElement::zero(F));
  r.coeffs[0] = GWElement::unit(F);
  for (const auto& [c, m] : x.terms()) {
    GWPowerSeries s = a_series_gen(c, N);
    if (m < 0) s = series_inverse(s);
    std::int64_t e = m < 0 ? -m : m;
    for (std::int64_t k = 0; k < e; ++k) r = series_mul(r, s);
  }
  return r;
}

GWElement a_n(const GWElement& x, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::Domain, "a_n needs n >= 0");
  return a_series(x, static_cast<std::size_t>(n)).coeffs[static_cast<std::size_t>(n)];
}

GWElement a_n_neg_lH(std::int64_t l, std::int64_t n, const FieldDesc& F) {
  if (l < 0 || n < 0) throw Error(ErrorKind::Domain, "a_n_neg_lH needs l, n >= 0");
  GWElement r(F);
  for (std::int64_t i = 0; i <= n; ++i) {
    Int c = binom_gen(Int(l), static_cast<unsigned>(i)) *
            binom_gen(Int(l), static_cast<unsigned>(n - i));
    if (c == 0) continue;
    if (n % 2) c = -c;
    r.add_class((n - i) % 2 ? SquareClass::minus_one(F) : SquareClass::one(F), to_mult(c));
  }
  return r;
}

GWElement a_n_neg_lH_poly(std::int64_t l, std::int64_t n, const FieldDesc& F) {
  if (l < 0 || n < 0) throw Error(ErrorKind::Domain, "a_n_neg_lH_poly needs l, n >= 0");
  GWPowerSeries base{F, {}};
  base.coeffs.assign(static_cast<std::size_t>(n) + 1, GWElement::zero(F));
  base.coeffs[0] = GWElement::unit(F);
  if (n >= 1) base.coeffs[1] = -GWElement::hyperbolic(1, F);
  if (n >= 2) base.coeffs[2] = GWElement::of_class(SquareClass::minus_one(F));
  GWPowerSeries r{F, {}};
  r.coeffs.assign(static_cast<std::size_t>(n) + 1, GWElement::zero(F));
  r.coeffs[0] = GWElement::unit(F);
  for (std::int64_t k = 0; k < l; ++k) r = series_mul(r, base);
  return r.coeffs[static_cast<std::size_t>(n)];
}

}  // namespace gwsym
