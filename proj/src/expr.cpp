#include "gwsym/expr.hpp"

#include <cctype>

namespace gwsym {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos, what);
  }
  [[noreturn]] void fail(const char* what) { throw ParseError(pos, what); }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Int parse_uint(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.s.size() || !is_digit(c.s[c.pos])) c.fail("digit");
  Int v = 0;
  while (c.pos < c.s.size() && is_digit(c.s[c.pos])) {
    v = v * 10 + (c.s[c.pos] - '0');
    ++c.pos;
  }
  return v;
}

Int parse_int(Cursor& c) {
  bool neg = c.accept('-');
  Int v = parse_uint(c);
  return neg ? Int(-v) : v;
}

// rational := int ['/' uint!=0]
Rat parse_rational(Cursor& c) {
  Int n = parse_int(c);
  if (c.accept('/')) {
    std::size_t at = c.pos;
    Int d = parse_uint(c);
    if (d == 0) throw ParseError(at, "nonzero denominator");
    return Rat(n, d);
  }
  return Rat(n);
}

// Expressions in t: sum of products of powers of atoms.
RatFunc parse_rf(Cursor& c);

RatFunc parse_rf_atom(Cursor& c) {
  char ch = c.peek();
  if (ch == '(') {
    ++c.pos;
    RatFunc v = parse_rf(c);
    c.expect(')', "')'");
    return v;
  }
  if (ch == 't') {
    ++c.pos;
    return RatFunc::t();
  }
  // integers only here; '/' is division at the term level, so "1/t" works
  if (ch == '-' || is_digit(ch)) return RatFunc::constant(Rat(parse_int(c)));
  c.fail("number, 't' or '('");
}

RatFunc parse_rf_factor(Cursor& c) {
  RatFunc base = parse_rf_atom(c);
  if (c.accept('^')) {
    Int e = parse_uint(c);
    if (e > 64) c.fail("exponent at most 64");
    return base.pow(static_cast<unsigned>(e));
  }
  return base;
}

RatFunc parse_rf_term(Cursor& c) {
  RatFunc v = parse_rf_factor(c);
  for (;;) {
    if (c.accept('*')) {
      v = v * parse_rf_factor(c);
    } else if (c.accept('/')) {
      std::size_t at = c.pos;
      RatFunc d = parse_rf_factor(c);
      if (d.is_zero()) throw ParseError(at, "nonzero divisor");
      v = v / d;
    } else {
      return v;
    }
  }
}

RatFunc parse_rf(Cursor& c) {
  int sign = 1;
  if (c.accept('-'))
    sign = -1;
  else
    c.accept('+');
  RatFunc v = parse_rf_term(c);
  if (sign < 0) v = -v;
  while (true) {
    if (c.accept('+'))
      v = v + parse_rf_term(c);
    else if (c.accept('-'))
      v = v - parse_rf_term(c);
    else
      return v;
  }
}

// term := [uint ['*']]? '<' class '>'
GWExprTerm parse_term(Cursor& c, bool allow_variable) {
  GWExprTerm t;
  if (is_digit(c.peek())) {
    Int m = parse_uint(c);
    t.mult = to_mult(m);
    c.accept('*');
  }
  c.expect('<', "'<'");
  std::size_t at = c.pos;
  if (allow_variable)
    t.cls = parse_rf(c);
  else
    t.cls = RatFunc::constant(parse_rational(c));
  if (t.cls.is_zero()) throw ParseError(at, "nonzero class");
  c.expect('>', "'>'");
  return t;
}

}  // namespace

GWExpr parse_gw(const std::string& s, bool allow_variable) {
  Cursor c{s};
  GWExpr e;
  if (c.at_end()) return e;  // empty input denotes 0
  if (c.peek() == '0') {     // bare "0" (what render produces for the zero element)
    std::size_t at = c.pos;
    ++c.pos;
    if (c.at_end()) return e;
    c.pos = at;
  }
  int sign = 1;
  if (c.accept('-'))
    sign = -1;
  else
    c.accept('+');
  for (;;) {
    GWExprTerm t = parse_term(c, allow_variable);
    t.sign = sign;
    e.terms.push_back(t);
    if (c.at_end()) return e;
    if (c.accept('+'))
      sign = 1;
    else if (c.accept('-'))
      sign = -1;
    else
      c.fail("'+' or '-'");
  }
}

GWElement to_gw(const GWExpr& e, const FieldDesc& F) {
  GWElement x = GWElement::zero(F);
  for (const auto& t : e.terms) {
    GWElement g = GWElement::zero(F);
    if (F.tag() == FieldTag::FunctionField) {
      g = GWElement::gen(F, t.cls);
    } else {
      if (!t.cls.is_constant())
        throw Error(ErrorKind::Domain, "class involves t but the field is " + F.str());
      g = GWElement::gen(F, t.cls.eval_at_zero());
    }
    x = x + g.scaled(t.sign * t.mult);
  }
  return x;
}

std::string render(const GWElement& x) { return x.str(); }

nlohmann::json gw_to_json(const GWElement& x) {
  nlohmann::json j;
  j["field"] = x.field().str();
  j["terms"] = nlohmann::json::array();
  for (const auto& [cls, mult] : x.terms()) {
    nlohmann::json t;
    switch (x.field().tag()) {
      case FieldTag::Rationals:
      case FieldTag::FinitePrime: {
        t["class"] = to_mult(cls.rep());
        break;
      }
      case FieldTag::Reals:
        t["class"] = cls.rep() < 0 ? -1 : 1;
        break;
      case FieldTag::FunctionField:
        t["class"] = cls.str();
        break;
    }
    t["mult"] = mult;
    j["terms"].push_back(t);
  }
  return j;
}

Poly parse_poly_x(const std::string& s) {
  // sum of monomials: [sign] [uint ['*']]? ['x' ['^' uint]]
  Cursor c{s};
  std::vector<Rat> coeffs;
  auto add = [&](std::size_t deg, const Int& v) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += Rat(v);
  };
  if (c.at_end()) c.fail("polynomial");
  bool first = true;
  while (!c.at_end()) {
    Int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("'+' or '-'");
    first = false;
    Int coef = 1;
    bool saw_coef = false;
    if (is_digit(c.peek())) {
      coef = parse_uint(c);
      saw_coef = true;
      c.accept('*');
    }
    if (c.accept('x')) {
      std::size_t deg = 1;
      if (c.accept('^')) {
        Int e = parse_uint(c);
        if (e > 1024) c.fail("exponent at most 1024");
        deg = static_cast<std::size_t>(e);
      }
      add(deg, sign * coef);
    } else if (saw_coef) {
      add(0, sign * coef);
    } else {
      c.fail("coefficient or 'x'");
    }
  }
  return Poly(coeffs);
}

}  // namespace gwsym
