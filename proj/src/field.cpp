#include "gwsym/field.hpp"

namespace gwsym {

namespace {
bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

FieldDesc FieldDesc::Q() { return FieldDesc{}; }

FieldDesc FieldDesc::Fp(std::int64_t p) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::Domain, "finite field requires an odd prime");
  FieldDesc f;
  f.tag_ = FieldTag::FinitePrime;
  f.p_ = p;
  return f;
}

FieldDesc FieldDesc::R() {
  FieldDesc f;
  f.tag_ = FieldTag::Reals;
  return f;
}

FieldDesc FieldDesc::function_field(const FieldDesc& base, std::string var) {
  if (base.is_function_field())
    throw Error(ErrorKind::UnsupportedField, "function fields do not nest");
  if (var.empty()) throw Error(ErrorKind::Domain, "empty variable name");
  FieldDesc f;
  f.tag_ = FieldTag::FunctionField;
  f.base_tag_ = base.tag_;
  f.p_ = base.p_;
  f.var_ = std::move(var);
  return f;
}

FieldDesc FieldDesc::base() const {
  if (!is_function_field())
    throw Error(ErrorKind::Domain, "base() on a non-function field");
  FieldDesc f;
  f.tag_ = base_tag_;
  f.p_ = p_;
  return f;
}

std::string FieldDesc::str() const {
  switch (tag_) {
    case FieldTag::Rationals: return "Q";
    case FieldTag::FinitePrime: return "F" + std::to_string(p_);
    case FieldTag::Reals: return "R";
    case FieldTag::FunctionField: return base().str() + "(" + var_ + ")";
  }
  return "?";
}

void require_same_field(const FieldDesc& a, const FieldDesc& b, const char* op) {
  if (!(a == b))
    throw Error(ErrorKind::FieldMismatch,
                std::string(op) + ": operands over " + a.str() + " and " + b.str());
}

}  // namespace gwsym
