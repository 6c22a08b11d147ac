#include "u2/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace u2 {

RatMat::RatMat(long long r, long long c) : rows(r), cols(c) {
  if (r < 0 || c < 0) throw std::invalid_argument("RatMat: negative dimension");
  a.assign(static_cast<size_t>(r * c), Rat(0));
}

RatMat RatMat::identity(long long n) {
  RatMat m(n, n);
  for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("RatMat: product shape mismatch");
  RatMat z(x.rows, y.cols);
  for (long long i = 0; i < x.rows; ++i)
    for (long long k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (long long j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("RatMat: sum shape mismatch");
  RatMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("RatMat: difference shape mismatch");
  RatMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

RatMat transpose(const RatMat& x) {
  RatMat z(x.cols, x.rows);
  for (long long i = 0; i < x.rows; ++i)
    for (long long j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

bool is_zero(const RatMat& x) {
  for (const Rat& v : x.a)
    if (v != 0) return false;
  return true;
}

RatMat block_diag(const std::vector<RatMat>& blocks) {
  long long r = 0, c = 0;
  for (const RatMat& b : blocks) r += b.rows, c += b.cols;
  RatMat z(r, c);
  long long i0 = 0, j0 = 0;
  for (const RatMat& b : blocks) {
    for (long long i = 0; i < b.rows; ++i)
      for (long long j = 0; j < b.cols; ++j) z.at(i0 + i, j0 + j) = b.at(i, j);
    i0 += b.rows, j0 += b.cols;
  }
  return z;
}

RatMat vstack(const RatMat& x, const RatMat& y) {
  if (x.cols != y.cols) throw std::invalid_argument("RatMat: vstack shape mismatch");
  RatMat z(x.rows + y.rows, x.cols);
  for (long long i = 0; i < x.rows; ++i)
    for (long long j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (long long i = 0; i < y.rows; ++i)
    for (long long j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

namespace {

// Row echelon with unit pivots; returns pivot columns. Mutates in place.
std::vector<long long> reduce(RatMat& m) {
  std::vector<long long> pivots;
  long long row = 0;
  for (long long col = 0; col < m.cols && row < m.rows; ++col) {
    long long p = -1;
    for (long long i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (long long j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = m.at(row, col);
    for (long long j = col; j < m.cols; ++j) m.at(row, j) /= inv;
    for (long long i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (long long j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

long long rank(RatMat x) { return static_cast<long long>(reduce(x).size()); }

bool is_invertible(const RatMat& x) { return x.rows == x.cols && rank(x) == x.rows; }

RatMat kernel_basis(const RatMat& x) {
  RatMat m = x;
  std::vector<long long> pivots = reduce(m);
  std::vector<bool> is_pivot(static_cast<size_t>(x.cols), false);
  for (long long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  RatMat k(x.cols, x.cols - static_cast<long long>(pivots.size()));
  long long kc = 0;
  for (long long free = 0; free < x.cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    k.at(free, kc) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], kc) = -m.at(static_cast<long long>(r), free);
    ++kc;
  }
  return k;
}

RatMat left_kernel_basis(const RatMat& x) { return transpose(kernel_basis(transpose(x))); }

RatMat solve(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("RatMat: solve shape mismatch");
  RatMat m(x.rows, x.cols + y.cols);
  for (long long i = 0; i < x.rows; ++i) {
    for (long long j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
    for (long long j = 0; j < y.cols; ++j) m.at(i, x.cols + j) = y.at(i, j);
  }
  std::vector<long long> pivots = reduce(m);
  for (long long c : pivots)
    if (c >= x.cols) throw std::invalid_argument("RatMat: inconsistent linear system");
  RatMat s(x.cols, y.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (long long j = 0; j < y.cols; ++j) s.at(pivots[r], j) = m.at(static_cast<long long>(r), x.cols + j);
  return s;
}

RatMat right_inverse(const RatMat& x) { return solve(x, RatMat::identity(x.rows)); }

RatMat inverse(const RatMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("RatMat: inverse of non-square matrix");
  RatMat r = solve(x, RatMat::identity(x.rows));
  if (!(x * r == RatMat::identity(x.rows))) throw std::invalid_argument("RatMat: matrix not invertible");
  return r;
}

}  // namespace u2
