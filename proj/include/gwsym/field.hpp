#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gwsym/error.hpp"

namespace gwsym {

enum class FieldTag : std::uint8_t { Rationals, FinitePrime, Reals, FunctionField };

// Supported coefficient fields: Q, F_p (odd p), R, and a rational function field in one
// variable over one of those three (nesting depth 1 by construction).
class FieldDesc {
public:
  static FieldDesc Q();
  static FieldDesc Fp(std::int64_t p);
  static FieldDesc R();
  static FieldDesc function_field(const FieldDesc& base, std::string var = "t");

  FieldTag tag() const { return tag_; }
  bool is_function_field() const { return tag_ == FieldTag::FunctionField; }
  std::int64_t p() const { return p_; }  // FinitePrime only (or base prime of F_p(t))
  const std::string& variable() const { return var_; }
  FieldDesc base() const;  // FunctionField only

  bool operator==(const FieldDesc& o) const = default;
  auto operator<=>(const FieldDesc& o) const = default;

  std::string str() const;

private:
  FieldTag tag_ = FieldTag::Rationals;
  FieldTag base_tag_ = FieldTag::Rationals;  // meaningful for FunctionField
  std::int64_t p_ = 0;
  std::string var_;
};

// Throws FieldMismatch unless the two descriptors agree.
void require_same_field(const FieldDesc& a, const FieldDesc& b, const char* op);

}  // namespace gwsym
