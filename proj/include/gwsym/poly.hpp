#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gwsym/numeric.hpp"

namespace gwsym {

// Dense univariate polynomial over Q, coefficient of x^k at c[k], trailing zeros trimmed.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  // Index of the lowest nonzero coefficient (order of vanishing at 0); -1 for zero poly.
  int valuation() const;

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly shifted_down(int k) const;  // divide by x^k; requires valuation() >= k

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;

  // Euclidean division: *this = q*d + r with deg r < deg d. Requires d nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  Poly monic() const;  // requires nonzero

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

// Quotient of polynomials, den != 0, stored gcd-reduced. When den(0) != 0 it is
// normalized so den(0) == 1.
class RatFunc {
public:
  RatFunc() : num_(Poly::constant(Rat(0))), den_(Poly::constant(Rat(1))) {}
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const Rat& a) { return RatFunc(Poly::constant(a), Poly::constant(Rat(1))); }
  static RatFunc t() { return RatFunc(Poly::x(), Poly::constant(Rat(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  // Order of vanishing at t = 0 (negative for a pole). Requires nonzero.
  int valuation_at_zero() const { return num_.valuation() - den_.valuation(); }

  // Defined iff den(0) != 0 after valuation cancellation was already performed by caller.
  bool defined_at_zero() const { return den_.coeff(0) != 0; }
  Rat eval_at_zero() const;  // requires defined_at_zero()

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // requires o nonzero
  RatFunc pow(unsigned k) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const RatFunc& o) const;

  std::string str(const std::string& var = "t") const;

private:
  Poly num_, den_;
};

}  // namespace gwsym
