#pragma once

// Shared fixtures for the model tests and the acceptance harness: random
// rational matrices, canonical vertical objects with known bar structure,
// base-change scrambling, and legal random morphisms between two of them.

#include "u2/model.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testgen {

using namespace u2;

inline RatMat M(const std::vector<std::vector<long long>>& rows) {
  RatMat m(static_cast<long long>(rows.size()), rows.empty() ? 0 : static_cast<long long>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<long long>(i), static_cast<long long>(j)) = rows[i][j];
  return m;
}

// Independent rank oracle: clear denominators per row, then fraction-free
// integer elimination (a different algorithm from the library's reduction).
inline long long oracle_rank(const RatMat& m) {
  std::vector<std::vector<Int>> a(static_cast<size_t>(m.rows), std::vector<Int>(static_cast<size_t>(m.cols)));
  for (long long r = 0; r < m.rows; ++r) {
    Int l = 1;
    for (long long c = 0; c < m.cols; ++c) l = lcm(l, Int(denominator(m.at(r, c))));
    for (long long c = 0; c < m.cols; ++c)
      a[static_cast<size_t>(r)][static_cast<size_t>(c)] = numerator(m.at(r, c)) * (l / denominator(m.at(r, c)));
  }
  long long rk = 0;
  Int prev = 1;
  for (long long col = 0; col < m.cols && rk < m.rows; ++col) {
    long long piv = -1;
    for (long long r = rk; r < m.rows; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(rk)], a[static_cast<size_t>(piv)]);
    for (long long r = rk + 1; r < m.rows; ++r) {
      for (long long c = col + 1; c < m.cols; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            (a[static_cast<size_t>(rk)][static_cast<size_t>(col)] * a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
             a[static_cast<size_t>(r)][static_cast<size_t>(col)] * a[static_cast<size_t>(rk)][static_cast<size_t>(c)]) /
            prev;
      a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
    }
    prev = a[static_cast<size_t>(rk)][static_cast<size_t>(col)];
    ++rk;
  }
  return rk;
}

inline RatMat random_mat(std::mt19937_64& rng, long long rows, long long cols) {
  RatMat m(rows, cols);
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) {
      long long num = static_cast<long long>(rng() % 5) - 2;
      long long den = 1 + static_cast<long long>(rng() % 2);
      m.at(i, j) = Rat(num, den);
    }
  return m;
}

inline RatMat random_invertible(std::mt19937_64& rng, long long n) {
  RatMat m = RatMat::identity(n);
  for (long long step = 0; step < 2 * n + 2; ++step) {
    if (n < 2) break;
    long long i = static_cast<long long>(rng() % static_cast<unsigned long long>(n));
    long long j = static_cast<long long>(rng() % static_cast<unsigned long long>(n));
    if (i == j) continue;
    if (rng() % 3 == 0) {
      for (long long c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
    } else {
      Rat f = Rat(static_cast<long long>(rng() % 3) - 1);
      for (long long c = 0; c < n; ++c) m.at(i, c) = m.at(i, c) + f * m.at(j, c);
    }
  }
  return m;
}

inline int parity(int d) { return ((d % 2) + 2) % 2; }

inline bool covers(const Bar& b, int d, int lo) {
  if (d > b.top || parity(d) != parity(b.top)) return false;
  return b.free_ ? d >= lo : d >= b.top - 2 * (b.len - 1);
}

// Basis position of bar `bi` at degree d, counting covering bars in input
// order (the layout used by module_from_bars).
inline long long bar_pos(const std::vector<Bar>& bars, size_t bi, int d, int lo) {
  long long pos = 0;
  for (size_t k = 0; k < bi; ++k)
    if (covers(bars[k], d, lo)) ++pos;
  return pos;
}

inline int free_len(const Window& w, int top) {
  return (top - (parity(w.lo) == parity(top) ? w.lo : w.lo + 1)) / 2 + 1;
}

// Canonical object: per point, one free bar per unit of V-dimension (top at
// that very degree) plus the given torsion bars; beta matches the k-th free
// bar of a parity to the k-th inverted-column coordinate.
struct Built {
  Type1Object obj;
  std::vector<std::vector<Bar>> barlists;
};

inline Built build_object(const Window& w, const std::vector<long long>& vdims,
                          const std::vector<std::vector<Bar>>& torsion) {
  Built out;
  out.obj.w = w;
  out.obj.V.w = w;
  out.obj.V.dims = vdims;
  for (size_t p = 0; p < torsion.size(); ++p) {
    std::vector<Bar> bars;
    std::vector<long long> trow;   // inverted-column row of each free bar
    std::map<int, long long> off;  // running offset per parity
    for (int d = w.lo; d <= w.hi; ++d)
      for (long long k = 0; k < vdims[static_cast<size_t>(w.idx(d))]; ++k) {
        bars.push_back({d, free_len(w, d), true});
        trow.push_back(off[parity(d)]++);
      }
    size_t nfree = bars.size();
    for (const Bar& b : torsion[p]) bars.push_back(b);
    Type1Point pt;
    pt.label = "p" + std::to_string(p);
    pt.N = module_from_bars(w, bars);
    for (int i = 0; i < w.size(); ++i) {
      int d = w.lo + i;
      RatMat b(inverted_column_dim(out.obj.V, parity(d)), pt.N.dims[static_cast<size_t>(i)]);
      for (size_t bi = 0; bi < bars.size(); ++bi)
        if (bi < nfree && covers(bars[bi], d, w.lo)) b.at(trow[bi], bar_pos(bars, bi, d, w.lo)) = 1;
      pt.beta.push_back(std::move(b));
    }
    out.obj.points.push_back(std::move(pt));
    out.barlists.push_back(std::move(bars));
  }
  return out;
}

inline std::vector<Bar> random_torsion(std::mt19937_64& rng, const Window& w, int margin) {
  std::vector<Bar> out;
  int floor_deg = w.lo + 2 * margin;
  size_t count = rng() % 3;
  for (size_t t = 0; t < count; ++t) {
    int top = floor_deg + static_cast<int>(rng() % static_cast<unsigned long long>(w.hi - floor_deg + 1));
    int maxlen = (top - floor_deg) / 2 + 1;
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(maxlen));
    out.push_back({top, len, false});
  }
  return out;
}

inline Built random_object(std::mt19937_64& rng, const Window& w, size_t npoints) {
  std::vector<long long> vdims(static_cast<size_t>(w.size()), 0);
  for (auto& d : vdims) d = rng() % 3;
  vdims[static_cast<size_t>(w.idx(0))] = 1 + rng() % 2;  // keep a mutable free bar above the bottom
  std::vector<std::vector<Bar>> torsion;
  for (size_t p = 0; p < npoints; ++p) torsion.push_back(random_torsion(rng, w, 3));
  return build_object(w, vdims, torsion);
}

// Change of basis on every layer; validity and bar structure are invariant.
inline void scramble(Type1Object& o, std::mt19937_64& rng) {
  std::vector<RatMat> wv, wvinv;
  for (long long d : o.V.dims) {
    RatMat u = random_invertible(rng, d);
    wvinv.push_back(inverse(u));
    wv.push_back(std::move(u));
  }
  for (Type1Point& p : o.points) {
    std::vector<RatMat> u, uinv;
    for (long long d : p.N.dims) {
      RatMat m = random_invertible(rng, d);
      uinv.push_back(inverse(m));
      u.push_back(std::move(m));
    }
    for (size_t i = 2; i < p.N.c.size(); ++i) p.N.c[i] = u[i - 2] * p.N.c[i] * uinv[i];
    for (size_t i = 0; i < p.beta.size(); ++i) {
      RatMat tw = inverted_column_action(o.V, wv, parity(o.w.lo + static_cast<int>(i)));
      p.beta[i] = tw * p.beta[i] * uinv[i];
    }
  }
}

inline Type0Object constant_sheaf(const Window& w, int deg) {
  Type0Object x;
  x.w = w;
  x.FH = vs_point(w, deg, 1);
  for (const char* l : {"a", "b"}) {
    Type0Point p;
    p.label = l;
    p.F = vs_point(w, deg, 1);
    for (int i = 0; i < w.size(); ++i)
      p.spread.push_back(w.lo + i == deg ? RatMat::identity(1) : RatMat(0, 0));
    x.points.push_back(std::move(p));
  }
  return x;
}

struct MorphismFixture {
  Type1Object x, y;
  Type1Morphism f;
};

// Random morphism in canonical coordinates: the stable part is an arbitrary
// degreewise map of the global spaces, which forces the free-to-free blocks;
// torsion-valued components are added wherever an interval map is c-linear
// (same parity, target top at least the source top, target dying no later
// than the shifted source).
inline MorphismFixture random_morphism(unsigned seed) {
  Window w{-10, 2};
  std::mt19937_64 rng(31337 + seed);
  size_t npoints = 1 + rng() % 2;

  std::vector<long long> xv(static_cast<size_t>(w.size()), 0), yv(static_cast<size_t>(w.size()), 0);
  for (auto& d : xv) d = rng() % 3;
  for (auto& d : yv) d = rng() % 3;
  xv[static_cast<size_t>(w.idx(0))] = 1 + rng() % 2;
  yv[static_cast<size_t>(w.idx(0))] = 1 + rng() % 2;

  std::vector<std::vector<Bar>> xt, yt;
  for (size_t p = 0; p < npoints; ++p) {
    xt.push_back(random_torsion(rng, w, 3));
    yt.push_back(random_torsion(rng, w, 3));
  }
  Built bx = build_object(w, xv, xt);
  Built by = build_object(w, yv, yt);

  MorphismFixture out;
  out.x = bx.obj;
  out.y = by.obj;
  out.f.fV.clear();
  for (int i = 0; i < w.size(); ++i)
    out.f.fV.push_back(random_mat(rng, yv[static_cast<size_t>(i)], xv[static_cast<size_t>(i)]));

  for (size_t p = 0; p < npoints; ++p) {
    const std::vector<Bar>& xb = bx.barlists[p];
    const std::vector<Bar>& yb = by.barlists[p];
    std::vector<RatMat> fn;
    for (int i = 0; i < w.size(); ++i)
      fn.push_back(RatMat(out.y.points[p].N.dims[static_cast<size_t>(i)], out.x.points[p].N.dims[static_cast<size_t>(i)]));

    // free-to-free: decided by fV on bars of equal top degree
    auto vslot = [&](const std::vector<Bar>& bars, size_t bi) {
      long long slot = 0;
      for (size_t k = 0; k < bi; ++k)
        if (bars[k].free_ && bars[k].top == bars[bi].top) ++slot;
      return slot;
    };
    for (size_t ib = 0; ib < xb.size(); ++ib) {
      if (!xb[ib].free_) continue;
      for (size_t jb = 0; jb < yb.size(); ++jb) {
        if (!yb[jb].free_ || yb[jb].top != xb[ib].top) continue;
        Rat coef = out.f.fV[static_cast<size_t>(w.idx(xb[ib].top))].at(vslot(yb, jb), vslot(xb, ib));
        for (int d = xb[ib].top; d >= w.lo; d -= 2) {
          size_t i = static_cast<size_t>(w.idx(d));
          fn[i].at(bar_pos(yb, jb, d, w.lo), bar_pos(xb, ib, d, w.lo)) = coef;
        }
      }
    }
    // torsion-valued components
    for (size_t ib = 0; ib < xb.size(); ++ib)
      for (size_t jb = 0; jb < yb.size(); ++jb) {
        const Bar& s = xb[ib];
        const Bar& t = yb[jb];
        if (t.free_ || parity(t.top) != parity(s.top) || t.top < s.top) continue;
        int shift = (t.top - s.top) / 2;
        if (!s.free_ && t.len > s.len + shift) continue;
        if (rng() % 2 == 0) continue;
        Rat mu = Rat(static_cast<long long>(rng() % 5) - 2);
        for (int d = s.top; d >= w.lo; d -= 2) {
          if (!covers(s, d, w.lo) || !covers(t, d, w.lo)) continue;
          size_t i = static_cast<size_t>(w.idx(d));
          fn[i].at(bar_pos(yb, jb, d, w.lo), bar_pos(xb, ib, d, w.lo)) =
              fn[i].at(bar_pos(yb, jb, d, w.lo), bar_pos(xb, ib, d, w.lo)) + mu;
        }
      }
    out.f.fN.push_back(std::move(fn));
  }
  return out;
}

}  // namespace testgen
