#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "gwsym/error.hpp"

namespace gwsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_perfect_square(const Int& x) {
  if (x < 0) return false;
  Int r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

// A nonzero rational is a square iff numerator and denominator both are (lowest terms).
inline bool is_square(const Rat& x) {
  return x > 0 && is_perfect_square(num(x)) && is_perfect_square(den(x));
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// Term multiplicities are int64; everything that can grow is Int. Narrow with a check.
inline std::int64_t to_mult(const Int& x) {
  if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::Domain, "multiplicity does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace gwsym
