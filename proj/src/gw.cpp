#include "gwsym/gw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gwsym {

GWElement GWElement::unit(const FieldDesc& F) { return of_class(SquareClass::one(F)); }

GWElement GWElement::gen(const FieldDesc& F, const Rat& a) {
  return of_class(SquareClass::of(F, a));
}

GWElement GWElement::gen(const FieldDesc& F, const RatFunc& r) {
  return of_class(SquareClass::of_function(F, r));
}

GWElement GWElement::of_class(SquareClass c, std::int64_t mult) {
  GWElement x(c.field());
  x.add_class(c, mult);
  return x;
}

GWElement GWElement::hyperbolic(std::int64_t l, const FieldDesc& F) {
  GWElement x(F);
  x.add_class(SquareClass::one(F), l);
  x.add_class(SquareClass::minus_one(F), l);
  return x;
}

void GWElement::add_class(const SquareClass& c, std::int64_t mult) {
  require_same_field(field_, c.field(), "add_class");
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(c, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t GWElement::rank() const {
  std::int64_t r = 0;
  for (const auto& [c, m] : terms_) r += m;
  return r;
}

GWElement GWElement::operator-() const { return scaled(-1); }

GWElement GWElement::scaled(std::int64_t k) const {
  GWElement r(field_);
  if (k == 0) return r;
  for (const auto& [c, m] : terms_) r.terms_.emplace(c, m * k);
  return r;
}

GWElement GWElement::operator+(const GWElement& o) const {
  require_same_field(field_, o.field_, "add");
  GWElement r = *this;
  for (const auto& [c, m] : o.terms_) r.add_class(c, m);
  return r;
}

GWElement GWElement::operator-(const GWElement& o) const { return *this + (-o); }

GWElement GWElement::operator*(const GWElement& o) const {
  require_same_field(field_, o.field_, "mul");
  GWElement r(field_);
  for (const auto& [c, m] : terms_)
    for (const auto& [d, k] : o.terms_) r.add_class(c * d, m * k);
  return r;
}

std::string GWElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, m] : terms_) {
    std::int64_t mag = m < 0 ? -m : m;
    if (first) {
      if (m < 0) out << "-";
      first = false;
    } else {
      out << (m < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag;
    out << "<" << c.str() << ">";
  }
  return out.str();
}

namespace {

int vp(Int n, const Int& p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// 2-adic valuation and the odd unit part of a nonzero rational, reduced mod 8.
void two_adic(const Rat& a, int& val, int& u_mod8) {
  Int n = num(a), d = den(a);
  int vn = vp(n, 2), vd = vp(d, 2);
  val = vn - vd;
  Int n2 = n >> vn, d2 = d >> vd;
  // d odd => d^{-1} = d (mod 8)
  Int m = ((n2 * d2) % 8 + 8) % 8;
  u_mod8 = static_cast<int>(m);
}

int legendre_rat(const Rat& u, const Int& p) {
  std::int64_t pp = static_cast<std::int64_t>(p);
  return SquareClass::legendre(num(u), pp) * SquareClass::legendre(den(u), pp);
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroElement, "Hilbert symbol of zero");
  if (v.is_infinity()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.p();
  if (p == 2) {
    int alpha, ua, beta, ub;
    two_adic(a, alpha, ua);
    two_adic(b, beta, ub);
    auto eps = [](int u8) { return (u8 % 4 == 3) ? 1 : 0; };    // (u-1)/2 mod 2
    auto omega = [](int u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; };  // (u^2-1)/8 mod 2
    int e = eps(ua) * eps(ub) + alpha * omega(ub) + beta * omega(ua);
    return e % 2 ? -1 : 1;
  }
  int alpha = vp(num(a), p) - vp(den(a), p);
  int beta = vp(num(b), p) - vp(den(b), p);
  Rat u = a, w = b;
  for (int k = 0; k < alpha; ++k) u /= Rat(p);
  for (int k = alpha; k < 0; ++k) u *= Rat(p);
  for (int k = 0; k < beta; ++k) w /= Rat(p);
  for (int k = beta; k < 0; ++k) w *= Rat(p);
  int eps_p = static_cast<int>(((p - 1) / 2) % 2);  // parity of (p-1)/2
  int r = 1;
  if ((alpha * beta * eps_p) % 2) r = -r;
  if (beta % 2) r *= legendre_rat(u, p);
  if (alpha % 2) r *= legendre_rat(w, p);
  return r;
}

std::vector<Int> odd_prime_factors(const Int& squarefree_rep) {
  std::vector<Int> out;
  Int n = abs(squarefree_rep);
  while (n % 2 == 0) n /= 2;
  for (Int d = 3; d <= SquareClass::kFactorBound && d * d <= n; d += 2)
    if (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);  // single large prime, by canonical-representative shape
  return out;
}

namespace {

// A genuine diagonal form kept as (class, multiplicity > 0) pairs; all invariants below
// are computed multiplicity-aware, so costs scale with the number of distinct classes,
// never with the rank.
using TermVec = std::vector<std::pair<SquareClass, std::int64_t>>;

// pos's positive part concatenated with neg's reflected negative part.
TermVec split_concat(const std::map<SquareClass, std::int64_t>& pos,
                     const std::map<SquareClass, std::int64_t>& neg) {
  TermVec out;
  for (const auto& [c, m] : pos)
    if (m > 0) out.emplace_back(c, m);
  for (const auto& [c, m] : neg)
    if (m < 0) out.emplace_back(c, -m);
  return out;
}

std::int64_t form_rank(const TermVec& form) {
  std::int64_t r = 0;
  for (const auto& [c, m] : form) r += m;
  return r;
}

SquareClass form_disc(const FieldDesc& F, const TermVec& form) {
  SquareClass d = SquareClass::one(F);
  for (const auto& [c, m] : form)
    if (m % 2) d = d * c;
  return d;
}

std::int64_t form_signature(const TermVec& form) {
  std::int64_t s = 0;
  for (const auto& [c, m] : form) s += m * c.sign();
  return s;
}

// Hasse invariant prod_{i<j} (a_i, a_j)_v of the expanded diagonal form. Symbols are
// +-1, so a class repeated m times contributes its self-symbol to the parity of
// binom(m,2) and cross pairs to that of m_i*m_j.
int form_hasse(const TermVec& form, const Place& v) {
  int h = 1;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const Rat a = Rat(form[i].first.rep());
    const std::int64_t m = form[i].second;
    if (m % 4 == 2 || m % 4 == 3) h *= hilbert_symbol(a, a, v);  // binom(m,2) odd
    for (std::size_t j = i + 1; j < form.size(); ++j)
      if ((m % 2) && (form[j].second % 2))
        h *= hilbert_symbol(a, Rat(form[j].first.rep()), v);
  }
  return h;
}

std::set<Place> relevant_places(const TermVec& form) {
  std::set<Place> places{Place::infinity(), Place::prime(2)};
  for (const auto& [c, m] : form)
    for (const auto& p : odd_prime_factors(c.rep())) places.insert(Place::prime(p));
  return places;
}

}  // namespace

GWInvariants invariants(const GWElement& x) {
  const FieldDesc& F = x.field();
  if (F.is_function_field())
    throw Error(ErrorKind::UnsupportedField, "no Hasse theory over " + F.str());
  GWInvariants inv;
  inv.rank = x.rank();
  inv.discriminant = SquareClass::one(F);
  bool genuine = true;
  for (const auto& [c, m] : x.terms()) {
    if (m % 2) inv.discriminant = inv.discriminant * c;
    if (m < 0) genuine = false;
  }
  if (F.tag() == FieldTag::Rationals || F.tag() == FieldTag::Reals) {
    std::int64_t s = 0;
    for (const auto& [c, m] : x.terms()) s += m * c.sign();
    inv.signature = s;
  }
  if (F.tag() == FieldTag::Rationals && genuine) {
    TermVec form = split_concat(x.terms(), {});
    for (const auto& v : relevant_places(form)) inv.hasse[v] = form_hasse(form, v);
  }
  return inv;
}

bool is_equal(const GWElement& x, const GWElement& y) {
  require_same_field(x.field(), y.field(), "is_equal");
  const FieldDesc& F = x.field();
  if (x == y) return true;
  switch (F.tag()) {
    case FieldTag::FunctionField:
      throw Error(ErrorKind::UnsupportedField, "equality undecided over " + F.str());
    case FieldTag::Reals: {
      GWInvariants a = invariants(x), b = invariants(y);
      return a.rank == b.rank && a.signature == b.signature;
    }
    case FieldTag::FinitePrime: {
      GWInvariants a = invariants(x), b = invariants(y);
      return a.rank == b.rank && a.discriminant == b.discriminant;
    }
    case FieldTag::Rationals:
      break;
  }
  if (x.rank() != y.rank()) return false;
  // Compare the genuine forms x+ (+) y- and y+ (+) x-; Witt cancellation makes this
  // equivalent to x = y. Equal classification data over Q decides isometry.
  TermVec A = split_concat(x.terms(), y.terms()), B = split_concat(y.terms(), x.terms());
  if (form_rank(A) != form_rank(B)) return false;  // cannot happen when ranks agree
  if (!(form_disc(F, A) == form_disc(F, B))) return false;
  if (form_signature(A) != form_signature(B)) return false;
  std::set<Place> places = relevant_places(A);
  for (const auto& v : relevant_places(B)) places.insert(v);
  for (const auto& v : places)
    if (form_hasse(A, v) != form_hasse(B, v)) return false;
  return true;
}

GWElement specialize_t(const GWElement& x) {
  const FieldDesc& F = x.field();
  if (!F.is_function_field())
    throw Error(ErrorKind::Domain, "specialize_t needs a function-field element");
  FieldDesc base = F.base();
  GWElement r(base);
  for (const auto& [c, m] : x.terms()) {
    if (c.unit().num().valuation() != 0 || !c.unit().defined_at_zero())
      throw Error(ErrorKind::BadUnitPart, "unit part vanishes or is undefined at 0");
    Rat value = Rat(c.rep()) * c.unit().eval_at_zero();
    r.add_class(SquareClass::of(base, value), m);
  }
  return r;
}

std::optional<std::pair<std::int64_t, std::int64_t>> as_pm_counts(const GWElement& x) {
  std::int64_t plus = 0, minus = 0;
  const SquareClass one = SquareClass::one(x.field());
  const SquareClass mone = SquareClass::minus_one(x.field());
  for (const auto& [c, m] : x.terms()) {
    if (c == one)
      plus = m;
    else if (c == mone)
      minus = m;
    else
      return std::nullopt;
  }
  return std::make_pair(plus, minus);
}

GWElement collapse_pm(const GWElement& x) {
  const FieldDesc& F = x.field();
  if (F.tag() != FieldTag::Rationals && F.tag() != FieldTag::Reals) return x;
  if (as_pm_counts(x)) return x;  // already in that shape
  const std::int64_t r = x.rank();
  std::int64_t s = 0;
  for (const auto& [c, m] : x.terms()) s += m * c.sign();
  if ((r + s) % 2 != 0) return x;
  GWElement y = GWElement::zero(F);
  y.add_class(SquareClass::one(F), (r + s) / 2);
  y.add_class(SquareClass::minus_one(F), (r - s) / 2);
  return is_equal(x, y) ? y : x;
}

}  // namespace gwsym
