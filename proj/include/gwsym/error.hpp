#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwsym {

enum class ErrorKind {
  ZeroElement,       // square class of 0 requested
  UnreducibleClass,  // squarefree reduction exceeds the factorization bound
  FieldMismatch,     // operands live over different fields
  UnsupportedField,  // operation not defined over this field
  BadUnitPart,       // function-field unit part vanishes or is undefined at t = 0
  SingularGram,      // Gram matrix is singular
  LengthMismatch,    // tensor words of different lengths
  OddPower,          // middle-cohomology machinery needs even n
  WrongBidegree,     // trace applied off the top bidegree
  NonIntegralH,      // rank defect is odd, no integral hyperbolic multiple
  NonIntegralCoefficient,  // closed formula produced a half-integer multiplicity
  BadConstantTerm,   // series inversion needs constant term <1>
  NotSquarefree,     // etale algebra factor has a repeated root
  Parse,             // expression syntax error (offset + expected set)
  Domain,            // other precondition violation
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Parse errors carry the byte offset of the failure and what was expected there.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(ErrorKind::Parse,
              "parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace gwsym
