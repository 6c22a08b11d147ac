#include "u2/intmath.hpp"

namespace u2 {

Xgcd xgcd(Int a, Int b) {
  // Invariants: A = a*x0 + b*y0, B = a*x1 + b*y1.
  Int A = a, B = b;
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (B != 0) {
    Int q = A / B;
    Int t;
    t = A - q * B; A = B; B = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (A < 0) { A = -A; x0 = -x0; y0 = -y0; }
  return Xgcd{A, x0, y0};
}

Int divexact(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("divexact by zero");
  Int q = a / b;
  if (q * b != a) throw std::invalid_argument("divexact: not divisible");
  return q;
}

std::string to_string(const ExtInt& e) {
  return e.finite ? e.v.str() : std::string("inf");
}

} // namespace u2
