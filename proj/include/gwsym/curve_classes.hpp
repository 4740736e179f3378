#pragma once

#include <vector>

#include "gwsym/quadform.hpp"

namespace gwsym {

// Finite etale Q-algebra presented as a product of Q[x]/(f_i), each f_i monic squarefree
// with integer coefficients, degree >= 1. NotSquarefree when gcd(f, f') is nonconstant.
class EtaleAlgebra {
public:
  explicit EtaleAlgebra(std::vector<Poly> factors);
  static EtaleAlgebra trivial() { return EtaleAlgebra(std::vector<Poly>{}); }

  const std::vector<Poly>& factors() const { return factors_; }
  std::int64_t degree() const;

private:
  std::vector<Poly> factors_;
};

// Power sums p_0..p_k of the roots of a monic integer polynomial (Newton's identities).
std::vector<Int> power_sums(const Poly& f, std::size_t k);

// Gram matrix of the trace pairing (x, y) -> Tr(xy) on the power basis of one factor.
GramMatrix trace_gram(const Poly& f);

// Trace form of the algebra as a GW element over Q (orthogonal sum over factors).
GWElement trace_form(const EtaleAlgebra& A);

// A curve with smooth projective model of genus g_tilde, singular locus S and its
// preimage S_tilde (etale algebras over Q); deg S_tilde >= deg S.
struct SingularCurveClass {
  std::int64_t genus_tilde = 0;
  EtaleAlgebra S = EtaleAlgebra::trivial();
  EtaleAlgebra S_tilde = EtaleAlgebra::trivial();
};

// Compactly supported Euler characteristic: (1 - g_tilde) H - trace_form(S_tilde)
// + trace_form(S).
GWElement chi_c_curve(const SingularCurveClass& c);

// Power-structure symmetric power of the compactly supported class.
GWElement a_n_chi_c(const SingularCurveClass& c, std::int64_t n);

}  // namespace gwsym
