#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwsym/closed_form.hpp"

using namespace gwsym;

static const FieldDesc Q = FieldDesc::Q();

TEST_CASE("generalized binomial coefficients") {
  CHECK(binom_gen(Int(4), 2) == 6);
  CHECK(binom_gen(Int(0), 0) == 1);
  CHECK(binom_gen(Int(5), 0) == 1);
  CHECK(binom_gen(Int(3), 5) == 0);
  CHECK(binom_gen(Int(-2), 3) == -4);
  CHECK(binom_gen(Int(-2), 4) == 5);
  CHECK(binom_gen(Int(-1), 7) == -1);
  CHECK(binom_gen(Int(-6), 2) == 21);
}

TEST_CASE("curve characteristic") {
  CHECK(chi_curve(0) == GWElement::hyperbolic(1));
  CHECK(chi_curve(1).is_zero());
  CHECK(chi_curve(3) == -GWElement::hyperbolic(2));
  CHECK(chi_curve(2, FieldDesc::R()) == -GWElement::hyperbolic(1, FieldDesc::R()));
}

TEST_CASE("rank law") {
  for (std::int64_t g = 0; g <= 10; ++g)
    for (std::int64_t n = 1; n <= 12; ++n) {
      GWElement x = chi_sym_closed(g, n);
      Int expected = rank_formula(g, n);
      CHECK(Int(x.rank()) == expected);
      // the formula itself: (-1)^n C(2g-2, n)
      CHECK(expected == (n % 2 == 0 ? binom_gen(Int(2 * g - 2), static_cast<unsigned>(n))
                                    : -binom_gen(Int(2 * g - 2), static_cast<unsigned>(n))));
      if (g >= 1 && n > 2 * g - 2) CHECK(x.is_zero());
    }
}

TEST_CASE("small values") {
  // genus 3, two points: 2<1> + 4<-1>
  CHECK(chi_sym_closed(3, 2) ==
        GWElement::unit(Q).scaled(2) + GWElement::gen(Q, Rat(-1)).scaled(4));
  // genus 2, two points: <-1>
  CHECK(chi_sym_closed(2, 2) == GWElement::gen(Q, Rat(-1)));
  // genus 1 vanishes beyond n = 0
  CHECK(chi_sym_closed(1, 1).is_zero());
  CHECK(chi_sym_closed(1, 5).is_zero());
  // odd n is a hyperbolic multiple
  CHECK(chi_sym_closed(2, 1) == -GWElement::hyperbolic(1));
  CHECK(chi_sym_closed(3, 3) == -GWElement::hyperbolic(2));
  CHECK(chi_sym_closed(4, 5) == -GWElement::hyperbolic(3));
  // genus 0: Sym^n P^1 = P^n
  CHECK(chi_sym_closed(0, 2) == GWElement::unit(Q).scaled(2) + GWElement::gen(Q, Rat(-1)));
  CHECK(chi_sym_closed(0, 4) == GWElement::unit(Q).scaled(3) + GWElement::gen(Q, Rat(-1)).scaled(2));
  CHECK(chi_sym_closed(0, 7) == GWElement::hyperbolic(4));
}

TEST_CASE("plus/minus presentation agrees with the element") {
  for (std::int64_t g = 0; g <= 8; ++g)
    for (std::int64_t n = 1; n <= 10; ++n) {
      auto [p, m] = chi_sym_closed_pm(g, n);
      auto pm = as_pm_counts(chi_sym_closed(g, n));
      REQUIRE(pm.has_value());  // the closed formula only ever uses <1> and <-1>
      CHECK(Int(pm->first) == p);
      CHECK(Int(pm->second) == m);
    }
}

TEST_CASE("alternating binomial identity behind the signature") {
  // sum_{i<=m} C(g,i) (-1)^i = (-1)^m C(g-1, m)
  for (std::int64_t g = 1; g <= 12; ++g)
    for (unsigned m = 0; m <= 12; ++m) {
      Int lhs = 0;
      for (unsigned i = 0; i <= m; ++i) {
        Int c = binom_gen(Int(g), i);
        lhs += (i % 2 == 0) ? c : -c;
      }
      Int rhs = binom_gen(Int(g - 1), m);
      CHECK(lhs == (m % 2 == 0 ? rhs : -rhs));
    }
}

TEST_CASE("signature from the pm presentation") {
  // signature of chi(Sym^{2m} C) is (-1)^m C(g-1, m)
  for (std::int64_t g = 1; g <= 6; ++g)
    for (std::int64_t m = 1; m <= 5; ++m) {
      auto [p, mm] = chi_sym_closed_pm(g, 2 * m);
      Int sig = binom_gen(Int(g - 1), static_cast<unsigned>(m));
      CHECK(p - mm == (m % 2 == 0 ? sig : -sig));
    }
}

TEST_CASE("other coefficient fields") {
  FieldDesc F5 = FieldDesc::Fp(5);
  GWElement x = chi_sym_closed(3, 2, F5);
  CHECK(x.rank() == 6);
  // -1 is a square mod 5, so everything lands on <1>
  CHECK(x == GWElement::unit(F5).scaled(6));
  GWElement y = chi_sym_closed(3, 2, FieldDesc::R());
  CHECK(y.rank() == 6);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(chi_sym_closed(-1, 2), Error);
  CHECK_THROWS_AS(chi_sym_closed(2, 0), Error);
}
