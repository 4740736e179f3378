#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwsym/closed_form.hpp"
#include "gwsym/curve_classes.hpp"
#include "gwsym/hodge.hpp"

using namespace gwsym;

static const FieldDesc Q = FieldDesc::Q();

static Poly poly(std::vector<int> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (int v : coeffs) c.emplace_back(v);
  return Poly(c);
}

TEST_CASE("power sums via Newton's identities") {
  // x^2 - 2: roots +-sqrt(2), p = 2, 0, 4, 0, 8, ...
  auto p = power_sums(poly({-2, 0, 1}), 6);
  CHECK(p == std::vector<Int>{2, 0, 4, 0, 8, 0, 16});
  // x^2 - 3x + 2 = (x-1)(x-2): p_k = 1 + 2^k
  auto q = power_sums(poly({2, -3, 1}), 4);
  CHECK(q == std::vector<Int>{2, 3, 5, 9, 17});
  // x^3 - x - 1: p_0 = 3, p_1 = 0, p_2 = 2, p_3 = 3, p_4 = 2, p_5 = 5
  auto r = power_sums(poly({-1, -1, 0, 1}), 5);
  CHECK(r == std::vector<Int>{3, 0, 2, 3, 2, 5});
  // linear factor
  CHECK(power_sums(poly({-7, 1}), 3) == std::vector<Int>{1, 7, 49, 343});
}

TEST_CASE("trace pairing gram matrices") {
  GramMatrix G = trace_gram(poly({-2, 0, 1}));  // x^2 - 2
  REQUIRE(G.dim() == 2);
  CHECK(G.entries[0][0] == Rat(2));
  CHECK(G.entries[0][1] == Rat(0));
  CHECK(G.entries[1][0] == Rat(0));
  CHECK(G.entries[1][1] == Rat(4));
  GramMatrix C = trace_gram(poly({1, 0, 1}));  // x^2 + 1
  CHECK(C.entries == std::vector<std::vector<Rat>>{{Rat(2), Rat(0)}, {Rat(0), Rat(-2)}});
}

TEST_CASE("trace forms of small algebras") {
  // Q[x]/(x - c) = Q regardless of c
  CHECK(trace_form(EtaleAlgebra({poly({-7, 1})})) == GWElement::unit(Q));
  CHECK(trace_form(EtaleAlgebra({poly({3, 1})})) == GWElement::unit(Q));
  // Q(sqrt 2): <1> + <2>
  CHECK(trace_form(EtaleAlgebra({poly({-2, 0, 1})})) ==
        GWElement::unit(Q) + GWElement::gen(Q, Rat(2)));
  // Q(i): <2> + <-2>, a hyperbolic plane
  GWElement qi = trace_form(EtaleAlgebra({poly({1, 0, 1})}));
  CHECK(qi == GWElement::gen(Q, Rat(2)) + GWElement::gen(Q, Rat(-2)));
  CHECK(is_equal(qi, GWElement::hyperbolic(1)));
  // split algebra Q x Q x Q
  CHECK(trace_form(EtaleAlgebra({poly({-1, 1}), poly({-2, 1}), poly({-3, 1})})) ==
        GWElement::unit(Q).scaled(3));
  // (x-1)(x-2) as one factor: same as the split presentation
  CHECK(is_equal(trace_form(EtaleAlgebra({poly({2, -3, 1})})), GWElement::unit(Q).scaled(2)));
  // empty algebra
  CHECK(trace_form(EtaleAlgebra::trivial()).is_zero());
  // additivity over the factor list
  GWElement joint = trace_form(EtaleAlgebra({poly({-2, 0, 1}), poly({1, 0, 1})}));
  CHECK(joint == trace_form(EtaleAlgebra({poly({-2, 0, 1})})) +
                     trace_form(EtaleAlgebra({poly({1, 0, 1})})));
}

TEST_CASE("trace form rank equals the degree") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> cd(-6, 6), dd(1, 5);
  int done = 0;
  while (done < 50) {
    int deg = dd(rng);
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = Rat(cd(rng));
    c[static_cast<std::size_t>(deg)] = Rat(1);
    Poly f(c);
    if (poly_gcd(f, f.derivative()).degree() > 0) continue;  // keep squarefree samples
    EtaleAlgebra A({f});
    CHECK(trace_form(A).rank() == deg);
    CHECK(A.degree() == deg);
    ++done;
  }
}

TEST_CASE("squarefreeness is enforced") {
  auto expect_nsf = [](std::vector<int> coeffs) {
    try {
      EtaleAlgebra({poly(coeffs)});
      FAIL("expected NotSquarefree");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSquarefree);
    }
  };
  expect_nsf({1, -2, 1});     // (x-1)^2
  expect_nsf({0, 0, 1});      // x^2
  expect_nsf({4, 0, -4, 0, 1});  // (x^2-2)^2
}

TEST_CASE("algebra presentation is validated") {
  CHECK_THROWS_AS(EtaleAlgebra({poly({2})}), Error);            // constant factor
  CHECK_THROWS_AS(EtaleAlgebra({poly({1, 2})}), Error);         // not monic
  CHECK_THROWS_AS(EtaleAlgebra({Poly({Rat(1, 2), Rat(1)})}), Error);  // fractional coefficient
}

TEST_CASE("compactly supported classes of singular curves") {
  // smooth projective curves: chi_c = (1 - g) H
  for (std::int64_t g = 0; g <= 4; ++g) {
    SingularCurveClass smooth{g, EtaleAlgebra::trivial(), EtaleAlgebra::trivial()};
    CHECK(chi_c_curve(smooth) == chi_curve(g));
  }
  // nodal cubic: normalization P^1, one node with two preimages
  SingularCurveClass nodal{0, EtaleAlgebra({poly({0, 1})}),
                           EtaleAlgebra({poly({0, 1}), poly({-1, 1})})};
  CHECK(chi_c_curve(nodal) == GWElement::gen(Q, Rat(-1)));  // H - 2<1> + <1> = H - <1>
  // cuspidal cubic: normalization P^1, one cusp with one preimage
  SingularCurveClass cusp{0, EtaleAlgebra({poly({0, 1})}), EtaleAlgebra({poly({0, 1})})};
  CHECK(chi_c_curve(cusp) == GWElement::hyperbolic(1));
  // node whose preimage pair is conjugate over Q(i): S_tilde = Q[x]/(x^2+1)
  SingularCurveClass twisted{0, EtaleAlgebra({poly({0, 1})}),
                             EtaleAlgebra({poly({1, 0, 1})})};
  CHECK(is_equal(chi_c_curve(twisted), GWElement::unit(Q)));  // H - H + <1>
  // the preimage must be at least as big as the singular locus
  SingularCurveClass bad{0, EtaleAlgebra({poly({0, 1}), poly({-1, 1})}),
                         EtaleAlgebra({poly({0, 1})})};
  CHECK_THROWS_AS(chi_c_curve(bad), Error);
}

TEST_CASE("symmetric powers of curve classes") {
  // smooth: matches the closed formula
  for (std::int64_t g = 0; g <= 4; ++g) {
    SingularCurveClass smooth{g, EtaleAlgebra::trivial(), EtaleAlgebra::trivial()};
    CHECK(a_n_chi_c(smooth, 0) == GWElement::unit(Q));
    CHECK(a_n_chi_c(smooth, 1) == chi_curve(g));
    for (std::int64_t n = 2; n <= 6; ++n)
      CHECK(is_equal(a_n_chi_c(smooth, n), chi_sym_closed(g, n)));
  }
  // smooth, even n: matches the cohomological computation as well
  SingularCurveClass g2{2, EtaleAlgebra::trivial(), EtaleAlgebra::trivial()};
  CHECK(is_equal(a_n_chi_c(g2, 2), chi_sym_hodge(2, 2)));
  CHECK(is_equal(a_n_chi_c(g2, 4), chi_sym_hodge(2, 4)));
  // nodal cubic: chi_c = <-1>, so Sym^n contributes <(-1)^n>
  SingularCurveClass nodal{0, EtaleAlgebra({poly({0, 1})}),
                           EtaleAlgebra({poly({0, 1}), poly({-1, 1})})};
  CHECK(is_equal(a_n_chi_c(nodal, 2), GWElement::unit(Q)));
  CHECK(is_equal(a_n_chi_c(nodal, 3), GWElement::gen(Q, Rat(-1))));
}
