#include "gwsym/poly.hpp"

#include <sstream>

namespace gwsym {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rat(k));
  return Poly(std::move(d));
}

Poly Poly::shifted_down(int k) const {
  std::vector<Rat> d(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end());
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rat> d = c_;
  for (auto& x : d) x = -x;
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t k = 0; k < c_.size(); ++k) d[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) d[k] += o.c_[k];
  return Poly(std::move(d));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> d(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(d));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> d = c_;
  for (auto& x : d) x *= s;
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
  std::vector<Rat> r = c_;
  std::vector<Rat> q(c_.size(), Rat(0));
  const int dd = d.degree();
  const Rat lead = d.leading();
  int rd = degree();
  while (rd >= dd) {
    if (r[rd] == 0) {
      --rd;
      continue;
    }
    Rat f = r[rd] / lead;
    q[rd - dd] = f;
    for (int k = 0; k <= dd; ++k) r[rd - dd + k] -= f * d.c_[k];
    --rd;
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "monic of zero polynomial");
  return *this * (Rat(1) / leading());
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Rat mag = a < 0 ? Rat(-a) : a;
    if (mag != 1 || k == 0) out << mag.str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::Domain, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rat d0 = den_.coeff(0);
  Rat scale = d0 != 0 ? d0 : den_.leading();
  num_ = num_ * (Rat(1) / scale);
  den_ = den_ * (Rat(1) / scale);
}

Rat RatFunc::eval_at_zero() const {
  if (!defined_at_zero()) throw Error(ErrorKind::BadUnitPart, "rational function undefined at 0");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r = RatFunc::constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::strong_ordering RatFunc::operator<=>(const RatFunc& o) const {
  if (auto c = num_ <=> o.num_; c != 0) return c;
  return den_ <=> o.den_;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_ == Poly::constant(Rat(1))) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace gwsym
