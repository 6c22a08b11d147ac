#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace u2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// g = gcd(a,b) >= 0 with a*x + b*y = g.
struct Xgcd {
  Int g, x, y;
};

Xgcd xgcd(Int a, Int b);

// Exact division; throws when b does not divide a.
Int divexact(const Int& a, const Int& b);

// Parameter that is either a (finite) integer or infinity.
struct ExtInt {
  bool finite = true;
  Int v = 0; // only meaningful when finite

  static ExtInt inf() { return ExtInt{false, 0}; }
  static ExtInt of(Int x) { return ExtInt{true, std::move(x)}; }

  bool operator==(const ExtInt&) const = default;
};

std::string to_string(const ExtInt& e);

} // namespace u2
