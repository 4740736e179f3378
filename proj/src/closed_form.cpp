#include "gwsym/closed_form.hpp"

namespace gwsym {

Int binom_gen(const Int& x, unsigned n) {
  Int num = 1;
  for (unsigned k = 0; k < n; ++k) num *= x - k;
  return num / factorial(n);
}

GWElement chi_curve(std::int64_t g, const FieldDesc& F) {
  if (g < 0) throw Error(ErrorKind::Domain, "negative genus");
  return GWElement::hyperbolic(1 - g, F);
}

GWElement chi_sym_closed(std::int64_t g, std::int64_t n, const FieldDesc& F) {
  if (g < 0) throw Error(ErrorKind::Domain, "negative genus");
  if (n < 1) throw Error(ErrorKind::Domain, "chi_sym_closed needs n >= 1");
  const Int B = binom_gen(Int(2 * g - 2), static_cast<unsigned>(n));
  GWElement x(F);
  if (n % 2) {
    if (B % 2) throw Error(ErrorKind::NonIntegralCoefficient, "odd rank for odd n");
    return GWElement::hyperbolic(to_mult(-B / 2), F);
  }
  const std::int64_t m = n / 2;
  Int sum = 0;
  for (std::int64_t i = 0; i <= m; ++i) {
    Int c = binom_gen(Int(g), static_cast<unsigned>(i));
    x.add_class(i % 2 ? SquareClass::minus_one(F) : SquareClass::one(F), to_mult(c));
    sum += c;
  }
  if ((B - sum) % 2)
    throw Error(ErrorKind::NonIntegralCoefficient, "hyperbolic multiplicity is not integral");
  return x + GWElement::hyperbolic(to_mult((B - sum) / 2), F);
}

std::pair<Int, Int> chi_sym_closed_pm(std::int64_t g, std::int64_t n) {
  if (g < 0) throw Error(ErrorKind::Domain, "negative genus");
  if (n < 1) throw Error(ErrorKind::Domain, "chi_sym_closed_pm needs n >= 1");
  const Int B = binom_gen(Int(2 * g - 2), static_cast<unsigned>(n));
  if (n % 2) {
    if (B % 2) throw Error(ErrorKind::NonIntegralCoefficient, "odd rank for odd n");
    return {-B / 2, -B / 2};
  }
  const std::int64_t m = n / 2;
  Int mid = binom_gen(Int(g - 1), static_cast<unsigned>(m));
  if (m % 2) mid = -mid;
  if ((B + mid) % 2 || (B - mid) % 2)
    throw Error(ErrorKind::NonIntegralCoefficient, "plus/minus counts are not integral");
  return {(B + mid) / 2, (B - mid) / 2};
}

Int rank_formula(std::int64_t g, std::int64_t n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::Domain, "rank_formula needs g, n >= 0");
  Int B = binom_gen(Int(2 * g - 2), static_cast<unsigned>(n));
  return n % 2 ? -B : B;
}

}  // namespace gwsym
