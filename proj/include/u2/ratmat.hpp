#pragma once

#include "u2/intmath.hpp"

#include <vector>

namespace u2 {

// Dense matrix over Q, row-major. Everything here is exact; there is no
// pivot-size control, so keep dimensions in the low hundreds.
struct RatMat {
  long long rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(long long r, long long c);

  Rat& at(long long i, long long j) { return a[i * cols + j]; }
  const Rat& at(long long i, long long j) const { return a[i * cols + j]; }

  static RatMat identity(long long n);

  bool operator==(const RatMat&) const = default;
};

RatMat operator*(const RatMat& x, const RatMat& y);
RatMat operator+(const RatMat& x, const RatMat& y);
RatMat operator-(const RatMat& x, const RatMat& y);

RatMat transpose(const RatMat& x);
bool is_zero(const RatMat& x);

// Block sum: arguments on the diagonal, zeros elsewhere.
RatMat block_diag(const std::vector<RatMat>& blocks);

// Rows of y appended below rows of x; column counts must agree.
RatMat vstack(const RatMat& x, const RatMat& y);

long long rank(RatMat x);
bool is_invertible(const RatMat& x);

// Columns form a basis of { v : x v = 0 }.
RatMat kernel_basis(const RatMat& x);

// Rows form a basis of { u : u x = 0 }; used as the projection onto a
// cokernel when x's columns span the subspace being killed.
RatMat left_kernel_basis(const RatMat& x);

// Particular solution of x * s = y with free variables set to zero.
// Throws std::invalid_argument when the system is inconsistent.
RatMat solve(const RatMat& x, const RatMat& y);

// r with x * r = identity; requires full row rank.
RatMat right_inverse(const RatMat& x);

RatMat inverse(const RatMat& x);

}  // namespace u2
