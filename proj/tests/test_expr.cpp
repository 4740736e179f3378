#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwsym/expr.hpp"

using namespace gwsym;

static const FieldDesc Q = FieldDesc::Q();

TEST_CASE("term list parsing") {
  GWExpr e = parse_gw("3<1> - 2<-1> + <2>");
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].sign == 1);
  CHECK(e.terms[0].mult == 3);
  CHECK(e.terms[0].cls.eval_at_zero() == Rat(1));
  CHECK(e.terms[1].sign == -1);
  CHECK(e.terms[1].mult == 2);
  CHECK(e.terms[1].cls.eval_at_zero() == Rat(-1));
  CHECK(e.terms[2].sign == 1);
  CHECK(e.terms[2].mult == 1);
  CHECK(e.terms[2].cls.eval_at_zero() == Rat(2));
}

TEST_CASE("starred and starless multipliers agree") {
  CHECK(to_gw(parse_gw("2*<3>"), Q) == to_gw(parse_gw("2<3>"), Q));
  CHECK(to_gw(parse_gw("-1*<1>-1*<-1>"), Q) == -GWElement::hyperbolic(1, Q));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(to_gw(parse_gw("  3 < 1 >   -   2 * < - 1 > "), Q) == to_gw(parse_gw("3<1>-2<-1>"), Q));
}

TEST_CASE("empty input denotes zero") {
  CHECK(to_gw(parse_gw(""), Q).is_zero());
  CHECK(to_gw(parse_gw("   "), Q).is_zero());
  CHECK(to_gw(parse_gw("0"), Q).is_zero());  // what render produces for zero
}

TEST_CASE("leading sign") {
  CHECK(to_gw(parse_gw("-<1>"), Q) == -GWElement::unit(Q));
  CHECK(to_gw(parse_gw("+<1>"), Q) == GWElement::unit(Q));
}

TEST_CASE("zero class is rejected with its offset") {
  try {
    parse_gw("<0>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
    CHECK(e.expected() == "nonzero class");
  }
}

TEST_CASE("rational classes") {
  CHECK(to_gw(parse_gw("<1/2>"), Q) == GWElement::gen(Q, Rat(1, 2)));
  CHECK(to_gw(parse_gw("<-3/4>"), Q) == GWElement::gen(Q, Rat(-3, 4)));
  CHECK_THROWS_AS(parse_gw("<1/0>"), ParseError);
}

TEST_CASE("malformed input carries byte offsets") {
  try {
    parse_gw("2<1> + ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 7);
  }
  CHECK_THROWS_AS(parse_gw("2<1> <2>"), ParseError);
  CHECK_THROWS_AS(parse_gw("<1>junk"), ParseError);
  CHECK_THROWS_AS(parse_gw("<>"), ParseError);
}

TEST_CASE("render/parse round trip on random elements") {
  std::mt19937 rng(7);
  const Rat classes[] = {Rat(1),  Rat(-1), Rat(2),  Rat(-2), Rat(3),
                         Rat(-3), Rat(5),  Rat(-6), Rat(7),  Rat(10)};
  std::uniform_int_distribution<int> pick(0, 9), mult(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    GWElement x = GWElement::zero(Q);
    for (int k = 0; k < 4; ++k) x = x + GWElement::gen(Q, classes[pick(rng)]).scaled(mult(rng));
    GWElement back = to_gw(parse_gw(render(x)), Q);
    CHECK(back == x);
  }
}

TEST_CASE("json shape over Q") {
  auto j = gw_to_json(to_gw(parse_gw("2<1> + 4<-1>"), Q));
  CHECK(j["field"] == "Q");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["class"] == 1);
  CHECK(j["terms"][0]["mult"] == 2);
  CHECK(j["terms"][1]["class"] == -1);
  CHECK(j["terms"][1]["mult"] == 4);
}

TEST_CASE("json over R and F5") {
  auto jr = gw_to_json(GWElement::gen(FieldDesc::R(), Rat(-9)));
  CHECK(jr["field"] == "R");
  CHECK(jr["terms"][0]["class"] == -1);
  auto jf = gw_to_json(GWElement::gen(FieldDesc::Fp(5), Rat(3)));
  CHECK(jf["field"] == "F5");
  CHECK(jf["terms"][0]["class"] == 2);  // 3 is a nonresidue mod 5; canonical rep is 2
}

TEST_CASE("json over a function field uses strings") {
  auto Qt = FieldDesc::function_field(Q);
  auto j = gw_to_json(to_gw(parse_gw("<t>", true), Qt));
  CHECK(j["field"] == "Q(t)");
  CHECK(j["terms"][0]["class"].is_string());
}

TEST_CASE("variable classes") {
  auto Qt = FieldDesc::function_field(Q);
  GWElement x = to_gw(parse_gw("<t> + <2*t^2 + t> - <4>", true), Qt);
  CHECK(x.terms().size() == 3);
  CHECK(to_gw(parse_gw("<t*t>", true), Qt) == to_gw(parse_gw("<t^2>", true), Qt));
  CHECK(to_gw(parse_gw("<(1+t)^2 - t^2 - 2*t>", true), Qt) == GWElement::unit(Qt));
  CHECK(to_gw(parse_gw("<1/t>", true), Qt) == to_gw(parse_gw("<t>", true), Qt));  // t ~ 1/t
  CHECK_THROWS_AS(parse_gw("<t - t>", true), ParseError);   // zero class
  CHECK_THROWS_AS(parse_gw("<t>", false), ParseError);       // t disallowed in base mode
  CHECK_THROWS_AS(parse_gw("<t^>", true), ParseError);
  CHECK_THROWS_AS(parse_gw("<(t>", true), ParseError);
}

TEST_CASE("variable class over a base field is a domain error") {
  CHECK_THROWS_AS(to_gw(parse_gw("<t>", true), Q), Error);
}

TEST_CASE("polynomial parsing") {
  CHECK(parse_poly_x("x^2-2") == Poly({Rat(-2), Rat(0), Rat(1)}));
  CHECK(parse_poly_x("x^3 - x - 1") == Poly({Rat(-1), Rat(-1), Rat(0), Rat(1)}));
  CHECK(parse_poly_x("x") == Poly::x());
  CHECK(parse_poly_x("5") == Poly::constant(Rat(5)));
  CHECK(parse_poly_x("3*x^2+2*x+1") == Poly({Rat(1), Rat(2), Rat(3)}));
  CHECK(parse_poly_x("2x") == Poly({Rat(0), Rat(2)}));
  CHECK(parse_poly_x("x^2+x+x") == Poly({Rat(0), Rat(2), Rat(1)}));  // like terms merge
  CHECK_THROWS_AS(parse_poly_x(""), ParseError);
  CHECK_THROWS_AS(parse_poly_x("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly_x("y"), ParseError);
  CHECK_THROWS_AS(parse_poly_x("x**2"), ParseError);
}
