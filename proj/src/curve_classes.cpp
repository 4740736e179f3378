#include "gwsym/curve_classes.hpp"

#include "gwsym/power.hpp"

namespace gwsym {

EtaleAlgebra::EtaleAlgebra(std::vector<Poly> factors) : factors_(std::move(factors)) {
  for (const Poly& f : factors_) {
    if (f.degree() < 1) throw Error(ErrorKind::Domain, "etale factor must have degree >= 1");
    if (f.leading() != 1) throw Error(ErrorKind::Domain, "etale factor must be monic");
    for (const Rat& c : f.coeffs())
      if (den(c) != 1) throw Error(ErrorKind::Domain, "etale factor must have integer coefficients");
    if (poly_gcd(f, f.derivative()).degree() > 0)
      throw Error(ErrorKind::NotSquarefree, "etale factor has a repeated root: " + f.str("x"));
  }
}

std::int64_t EtaleAlgebra::degree() const {
  std::int64_t d = 0;
  for (const Poly& f : factors_) d += f.degree();
  return d;
}

std::vector<Int> power_sums(const Poly& f, std::size_t k) {
  const int d = f.degree();
  // e_i = (-1)^i * coeff of x^(d-i); Newton: p_j = sum_{i<j} (-1)^(i-1) e_i p_{j-i}
  // + (-1)^(j-1) j e_j (j <= d), and the pure recurrence for j > d.
  std::vector<Int> e(d + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= d; ++i) {
    Rat c = f.coeff(d - i);
    e[i] = (i % 2 ? -num(c) : num(c));
  }
  std::vector<Int> p(k + 1, 0);
  p[0] = d;
  for (std::size_t j = 1; j <= k; ++j) {
    Int s = 0;
    const int top = std::min<int>(static_cast<int>(j), d);
    for (int i = 1; i <= top; ++i) {
      Int term = e[i] * (static_cast<std::size_t>(i) == j ? Int(static_cast<int>(j)) : p[j - i]);
      s += (i % 2 ? term : -term);
    }
    p[j] = s;
  }
  return p;
}

GramMatrix trace_gram(const Poly& f) {
  const int d = f.degree();
  std::vector<Int> p = power_sums(f, static_cast<std::size_t>(2 * d - 2));
  GramMatrix G;
  G.field = FieldDesc::Q();
  G.entries.assign(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G.entries[i][j] = Rat(p[i + j]);
  return G;
}

GWElement trace_form(const EtaleAlgebra& A) {
  GWElement x(FieldDesc::Q());
  for (const Poly& f : A.factors()) x += gram_to_gw(trace_gram(f));
  return x;
}

GWElement chi_c_curve(const SingularCurveClass& c) {
  if (c.genus_tilde < 0) throw Error(ErrorKind::Domain, "negative genus");
  if (c.S_tilde.degree() < c.S.degree())
    throw Error(ErrorKind::Domain, "singular preimage smaller than the singular locus");
  return GWElement::hyperbolic(1 - c.genus_tilde) - trace_form(c.S_tilde) + trace_form(c.S);
}

GWElement a_n_chi_c(const SingularCurveClass& c, std::int64_t n) {
  return a_n(chi_c_curve(c), n);
}

}  // namespace gwsym
