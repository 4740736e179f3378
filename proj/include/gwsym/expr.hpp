#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gwsym/gw.hpp"

namespace gwsym {

// One parsed term: sign * mult * <cls>. cls is a rational function of t; constant unless
// the parser ran in variable mode.
struct GWExprTerm {
  int sign = 1;
  std::int64_t mult = 1;
  RatFunc cls;
};

struct GWExpr {
  std::vector<GWExprTerm> terms;
};

// Grammar: expr := [sign] term (sign term)*, term := [uint ['*']]? '<' class '>',
// whitespace-insensitive; the empty string denotes 0. In base mode class := rational
// (integer or p/q); with allow_variable the class may be any +,-,*,/,^,() expression in
// t. ParseError carries the byte offset and the expected token; a zero class is rejected.
GWExpr parse_gw(const std::string& s, bool allow_variable = false);

// Evaluate over a field. Over non-function fields every class must be constant.
GWElement to_gw(const GWExpr& e, const FieldDesc& F);

// Canonical rendering (same shape the parser accepts, e.g. "2<1> + 4<-1>", "0").
std::string render(const GWElement& x);

// {"field": "...", "terms": [{"class": c, "mult": m}, ...]} in canonical term order;
// classes are numbers over Q/R/F_p and strings over function fields.
nlohmann::json gw_to_json(const GWElement& x);

// Monic integer polynomial in x, e.g. "x^2-2", "x^3 - x - 1".
Poly parse_poly_x(const std::string& s);

}  // namespace gwsym
