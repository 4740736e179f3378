#include "gwsym/square_class.hpp"

#include <boost/multiprecision/integer.hpp>

namespace gwsym {

Int SquareClass::squarefree_part(Int n) {
  if (n == 0) throw Error(ErrorKind::ZeroElement, "square class of zero");
  Int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Int out = 1;
  auto strip = [&](const Int& d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2) out *= d;
  };
  strip(2);
  for (Int d = 3; d <= kFactorBound && d * d <= n; d += 2) strip(d);
  if (n > 1) {
    // Leftover has all prime factors > kFactorBound. A perfect square has all exponents
    // even; below bound^2 there is room for a single prime only.
    if (is_perfect_square(n)) {
      // contributes nothing
    } else if (n < Int(kFactorBound) * kFactorBound) {
      out *= n;
    } else {
      throw Error(ErrorKind::UnreducibleClass,
                  "squarefree reduction exceeds the factorization bound: " + n.str());
    }
  }
  return sign * out;
}

int SquareClass::legendre(const Int& a, std::int64_t p) {
  Int r = boost::multiprecision::powm(((a % p) + p) % p, Int((p - 1) / 2), Int(p));
  if (r == 0) throw Error(ErrorKind::ZeroElement, "Legendre symbol of zero residue");
  return r == 1 ? 1 : -1;
}

std::int64_t SquareClass::least_nonresidue(std::int64_t p) {
  for (std::int64_t a = 2;; ++a)
    if (legendre(Int(a), p) == -1) return a;
}

Int SquareClass::canonical_rep(const FieldDesc& F, const Rat& a) {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "square class of zero");
  switch (F.tag()) {
    case FieldTag::Rationals:
      // <p/q> = <pq> up to the square q^2.
      return squarefree_part(num(a) * den(a));
    case FieldTag::Reals:
      return a > 0 ? 1 : -1;
    case FieldTag::FinitePrime: {
      std::int64_t p = F.p();
      if (num(a) % p == 0 || den(a) % p == 0)
        throw Error(ErrorKind::ZeroElement,
                    "element has nonzero valuation at p, not a unit of F" + std::to_string(p));
      int s = legendre(num(a), p) * legendre(den(a), p);
      return s == 1 ? Int(1) : Int(least_nonresidue(p));
    }
    case FieldTag::FunctionField:
      throw Error(ErrorKind::Domain, "use of_function for function-field classes");
  }
  throw Error(ErrorKind::Domain, "unreachable");
}

SquareClass SquareClass::of(const FieldDesc& F, const Rat& a) {
  if (F.is_function_field()) return of_function(F, RatFunc::constant(a));
  SquareClass c;
  c.field_ = F;
  c.rep_ = canonical_rep(F, a);
  return c;
}

SquareClass SquareClass::of_function(const FieldDesc& F, const RatFunc& r) {
  if (!F.is_function_field())
    throw Error(ErrorKind::Domain, "of_function needs a function field");
  if (r.is_zero()) throw Error(ErrorKind::ZeroElement, "square class of zero");
  int v = r.valuation_at_zero();
  // r = t^v * w with w(0) defined and nonzero; t^(v - nu) is a square.
  Poly wn = r.num().shifted_down(r.num().valuation());
  Poly wd = r.den().shifted_down(r.den().valuation());
  Rat w0 = wn.coeff(0) / wd.coeff(0);
  Int base = canonical_rep(F.base(), w0);
  SquareClass c;
  c.field_ = F;
  c.rep_ = base;
  c.nu_ = ((v % 2) + 2) % 2;
  c.unit_ = RatFunc(wn, wd * Poly::constant(Rat(base)));
  return c;
}

SquareClass SquareClass::from_parts(const FieldDesc& F, const SquareClass& base_class, int nu,
                                    const RatFunc& unit) {
  if (!F.is_function_field())
    throw Error(ErrorKind::Domain, "from_parts needs a function field");
  if (!(base_class.field() == F.base()))
    throw Error(ErrorKind::FieldMismatch, "base class lives over the wrong field");
  if (nu != 0 && nu != 1) throw Error(ErrorKind::Domain, "exponent must be 0 or 1");
  if (unit.is_zero() || unit.num().valuation() != 0 || unit.den().valuation() != 0)
    throw Error(ErrorKind::BadUnitPart, "unit part vanishes or is undefined at 0");
  SquareClass c;
  c.field_ = F;
  c.rep_ = base_class.rep();
  c.nu_ = nu;
  c.unit_ = unit;
  return c;
}

SquareClass SquareClass::one(const FieldDesc& F) {
  SquareClass c;
  c.field_ = F;
  return c;
}

SquareClass SquareClass::minus_one(const FieldDesc& F) {
  if (F.is_function_field())
    return of_function(F, RatFunc::constant(Rat(-1)));
  return of(F, Rat(-1));
}

bool SquareClass::is_one() const {
  return rep_ == 1 && nu_ == 0 && unit_ == RatFunc::constant(Rat(1));
}

int SquareClass::sign() const {
  if (field_.tag() == FieldTag::Rationals || field_.tag() == FieldTag::Reals)
    return rep_ < 0 ? -1 : 1;
  throw Error(ErrorKind::UnsupportedField, "sign undefined over " + field_.str());
}

Int SquareClass::mul_rep(const FieldDesc& F, const Int& a, const Int& b) {
  switch (F.tag()) {
    case FieldTag::Rationals: {
      // Both squarefree: shared primes square away.
      Int g = gcd(a, b);
      return (a / g) * (b / g);
    }
    case FieldTag::Reals:
      return a * b;
    case FieldTag::FinitePrime:
      return a == b ? Int(1) : (a == 1 ? b : (b == 1 ? a : Int(1)));
    case FieldTag::FunctionField:
      break;
  }
  throw Error(ErrorKind::Domain, "unreachable");
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  require_same_field(field_, o.field_, "square class product");
  SquareClass c;
  c.field_ = field_;
  if (!field_.is_function_field()) {
    c.rep_ = mul_rep(field_, rep_, o.rep_);
    return c;
  }
  c.rep_ = mul_rep(field_.base(), rep_, o.rep_);
  c.nu_ = (nu_ + o.nu_) % 2;
  // rep(a)rep(b) = rep(ab) * s^2; fold the square s^2 into the unit part.
  Rat s2 = Rat(rep_ * o.rep_) / Rat(c.rep_);
  c.unit_ = unit_ * o.unit_ * RatFunc::constant(s2);
  return c;
}

bool SquareClass::operator==(const SquareClass& o) const {
  return field_ == o.field_ && rep_ == o.rep_ && nu_ == o.nu_ && unit_ == o.unit_;
}

bool SquareClass::operator<(const SquareClass& o) const {
  if (field_ != o.field_) return field_ < o.field_;
  bool neg = rep_ < 0, oneg = o.rep_ < 0;
  if (neg != oneg) return oneg;  // positive representatives first
  if (rep_ != o.rep_) {
    Int a = abs(rep_), b = abs(o.rep_);
    if (a != b) return a < b;
  }
  if (nu_ != o.nu_) return nu_ < o.nu_;
  return unit_ < o.unit_;
}

std::string SquareClass::str() const {
  if (!field_.is_function_field()) return rep_.str();
  std::string s = rep_.str();
  const std::string& v = field_.variable();
  if (nu_) s += "*" + v;
  if (!(unit_ == RatFunc::constant(Rat(1)))) s += "*(" + unit_.str(v) + ")";
  return s;
}

}  // namespace gwsym
