#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwsym/square_class.hpp"

namespace gwsym {

// A place of Q: a finite prime or the real place.
class Place {
public:
  static Place infinity() { return Place(0); }
  static Place prime(Int p) { return Place(std::move(p)); }
  bool is_infinity() const { return p_ == 0; }
  const Int& p() const { return p_; }
  bool operator==(const Place& o) const = default;
  bool operator<(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return o.is_infinity();  // finite places first
    return p_ < o.p_;
  }
  std::string str() const { return is_infinity() ? "oo" : p_.str(); }

private:
  explicit Place(Int p) : p_(std::move(p)) {}
  Int p_;
};

struct GWInvariants {
  std::int64_t rank = 0;
  std::optional<std::int64_t> signature;  // Q and R
  SquareClass discriminant;
  // Hasse invariants over Q at every relevant place (2, oo, odd primes dividing a
  // representative). Present only for genuine elements (all multiplicities >= 0).
  std::map<Place, int> hasse;
};

// Virtual form over a fixed field: finite Z-linear combination of square classes <a>.
// Stored canonically (classes reduced, zero multiplicities dropped, deterministic order).
class GWElement {
public:
  explicit GWElement(FieldDesc field) : field_(std::move(field)) {}

  static GWElement zero(const FieldDesc& F) { return GWElement(F); }
  static GWElement unit(const FieldDesc& F);                          // <1>
  static GWElement gen(const FieldDesc& F, const Rat& a);             // <a>
  static GWElement gen(const FieldDesc& F, const RatFunc& r);         // <r(t)> over F(t)
  static GWElement of_class(SquareClass c, std::int64_t mult = 1);
  // l * (<1> + <-1>); negative l gives a virtual multiple.
  static GWElement hyperbolic(std::int64_t l, const FieldDesc& F = FieldDesc::Q());

  const FieldDesc& field() const { return field_; }
  const std::map<SquareClass, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t rank() const;

  GWElement operator-() const;
  GWElement operator+(const GWElement& o) const;
  GWElement operator-(const GWElement& o) const;
  GWElement operator*(const GWElement& o) const;
  GWElement scaled(std::int64_t k) const;
  GWElement& operator+=(const GWElement& o) { return *this = *this + o; }

  // Structural equality of canonical representations (not GW-ring equality; see is_equal).
  bool operator==(const GWElement& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  void add_class(const SquareClass& c, std::int64_t mult);

  std::string str() const;

private:
  FieldDesc field_;
  std::map<SquareClass, std::int64_t> terms_;
};

// Hilbert symbol (a, b)_v over Q; a, b nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// rank / signature / discriminant / Hasse data. UnsupportedField over function fields.
GWInvariants invariants(const GWElement& x);

// Decides equality in GW(k). Q uses rank + the genuine comparison x+ (+) y- vs y+ (+) x-
// (rank, discriminant, signature, Hasse everywhere relevant); R uses rank + signature;
// F_p uses rank + discriminant. UnsupportedField over function fields.
bool is_equal(const GWElement& x, const GWElement& y);

// Specialization GW(F(t)) -> GW(F): <c t^nu u(t)> -> <c u(0)> termwise.
GWElement specialize_t(const GWElement& x);

// (p, m) with x = p<1> + m<-1> when x is supported on the classes of 1 and -1.
std::optional<std::pair<std::int64_t, std::int64_t>> as_pm_counts(const GWElement& x);

// The representative p<1> + m<-1> implied by rank and signature, when x is equal to one
// (verified via is_equal); x unchanged otherwise. Q and R only; other fields pass through.
GWElement collapse_pm(const GWElement& x);

// Odd primes dividing the representative of a class over Q (helper for place sets).
std::vector<Int> odd_prime_factors(const Int& squarefree_rep);

}  // namespace gwsym
