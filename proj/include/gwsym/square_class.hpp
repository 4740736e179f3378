#pragma once

#include <compare>
#include <string>

#include "gwsym/field.hpp"
#include "gwsym/numeric.hpp"
#include "gwsym/poly.hpp"

namespace gwsym {

// A square class a.k^x2 of the multiplicative group, stored by canonical representative:
//   Q  : the squarefree integer with the sign of a (12 -> 3, 1/2 -> 2)
//   R  : +1 or -1
//   F_p: 1 or the least positive quadratic nonresidue
//   F(t): base class c, exponent nu in {0,1} and a unit part u with u(0) defined and
//         nonzero, denoting c * t^nu * u(t). The unit part is not reduced modulo squares
//         (that would need polynomial factorization), so equality of classes over F(t) is
//         syntactic on the canonical triple.
class SquareClass {
public:
  SquareClass() = default;  // the class of 1 over Q

  // Canonical class of a nonzero field element. Throws ZeroElement on 0, UnreducibleClass
  // when the squarefree reduction needs a prime factor beyond the trial-division bound.
  static SquareClass of(const FieldDesc& F, const Rat& a);
  static SquareClass of_function(const FieldDesc& F, const RatFunc& r);
  // Assemble a function-field class from parts; validates the unit part (BadUnitPart).
  static SquareClass from_parts(const FieldDesc& F, const SquareClass& base_class, int nu,
                                const RatFunc& unit);
  static SquareClass one(const FieldDesc& F);
  static SquareClass minus_one(const FieldDesc& F);

  const FieldDesc& field() const { return field_; }
  const Int& rep() const { return rep_; }  // base fields; base-class representative for F(t)
  int nu() const { return nu_; }
  const RatFunc& unit() const { return unit_; }

  bool is_one() const;
  int sign() const;  // Q and R only: sign of the representative

  SquareClass operator*(const SquareClass& o) const;

  bool operator==(const SquareClass& o) const;
  bool operator<(const SquareClass& o) const;  // canonical order: (sign, |rep|), then (nu, unit)

  std::string str() const;

  // Trial-division bound for squarefree reduction over Q.
  static constexpr std::int64_t kFactorBound = 1000000;

  // Squarefree part of a nonzero integer (sign preserved); UnreducibleClass beyond the bound.
  static Int squarefree_part(Int n);
  // Legendre symbol of a mod p for odd prime p; requires a not divisible by p.
  static int legendre(const Int& a, std::int64_t p);
  static std::int64_t least_nonresidue(std::int64_t p);

private:
  static Int canonical_rep(const FieldDesc& F, const Rat& a);
  static Int mul_rep(const FieldDesc& F, const Int& a, const Int& b);

  FieldDesc field_;
  Int rep_ = 1;
  int nu_ = 0;                          // function fields only
  RatFunc unit_ = RatFunc::constant(Rat(1));  // function fields only
};

}  // namespace gwsym
