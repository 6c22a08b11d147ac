#include "u2/lattice.hpp"

#include <algorithm>
#include <tuple>

namespace u2 {

DualLattice DualLattice::from_generators(const std::vector<Vec2>& gens) {
  // Fold generators into head = (p, q) with p = gcd of first coordinates,
  // accumulating the eliminated rows (0, *) into tail.
  Vec2 head{0, 0};
  Int tail = 0;
  for (const Vec2& v : gens) {
    if (v.a == 0) { tail = gcd(tail, v.b); continue; }
    if (head.a == 0) { head = v; continue; }
    Xgcd e = xgcd(head.a, v.a);
    Int det = head.a * v.b - v.a * head.b;
    tail = gcd(tail, det / e.g);
    head = Vec2{e.g, e.x * head.b + e.y * v.b};
  }

  DualLattice L;
  if (head.a == 0) {
    if (tail == 0) return L;
    L.rank_ = 1;
    L.rows_ = {Vec2{0, abs(tail)}};
    return L;
  }
  if (head.a < 0) head = -head;
  if (tail == 0) {
    L.rank_ = 1;
    L.rows_ = {head};
    return L;
  }
  Int r = abs(tail);
  Int q = head.b % r;
  if (q < 0) q += r;
  L.rank_ = 2;
  L.rows_ = {Vec2{head.a, q}, Vec2{0, r}};
  return L;
}

bool DualLattice::contains(const Vec2& v) const {
  switch (rank_) {
    case 0:
      return v.a == 0 && v.b == 0;
    case 1: {
      const Vec2& u = rows_[0];
      if (u.a != 0) {
        if (v.a % u.a != 0) return false;
        Int t = v.a / u.a;
        return t * u.b == v.b;
      }
      return v.a == 0 && v.b % u.b == 0;
    }
    default: {
      const Vec2& row0 = rows_[0];
      const Vec2& row1 = rows_[1];
      if (v.a % row0.a != 0) return false;
      Int x = v.a / row0.a;
      Int rem = v.b - x * row0.b;
      return rem % row1.b == 0;
    }
  }
}

bool DualLattice::subset_of(const DualLattice& other) const {
  for (const Vec2& v : rows_)
    if (!other.contains(v)) return false;
  return true;
}

ExtInt DualLattice::index() const {
  if (rank_ < 2) return ExtInt::inf();
  return ExtInt::of(rows_[0].a * rows_[1].b);
}

DualLattice DualLattice::w_image() const {
  std::vector<Vec2> g;
  g.reserve(rows_.size());
  for (const Vec2& v : rows_) g.push_back(v.swapped());
  return from_generators(g);
}

bool DualLattice::is_invariant() const { return w_image() == *this; }

bool DualLattice::operator<(const DualLattice& o) const {
  auto key = [](const DualLattice& L) {
    std::vector<Int> k{Int(L.rank_)};
    for (const Vec2& v : L.rows_) { k.push_back(v.a); k.push_back(v.b); }
    return k;
  };
  return key(*this) < key(o);
}

DualLattice canonicalize(const std::vector<Vec2>& gens) {
  return DualLattice::from_generators(gens);
}

DualLattice make_lambda(int family, const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw std::invalid_argument("make_lambda: parameters must be positive");
  if (family == 1) return canonicalize({Vec2{m, m}, Vec2{n, -n}});
  if (family != 2) throw std::invalid_argument("make_lambda: family must be 1 or 2");
  if ((m + n) % 2 != 0)
    throw std::invalid_argument("make_lambda: family 2 needs m+n and m-n even");
  Vec2 coset{(m + n) / 2, (m - n) / 2};
  return canonicalize({Vec2{m, m}, Vec2{n, -n}, coset});
}

DualLattice make_edge_plus(const Int& m) {
  if (m < 1) throw std::invalid_argument("make_edge_plus: parameter must be positive");
  return canonicalize({Vec2{m, m}});
}

DualLattice make_edge_minus(const Int& n) {
  if (n < 1) throw std::invalid_argument("make_edge_minus: parameter must be positive");
  return canonicalize({Vec2{n, -n}});
}

DualLattice make_lattice(const LatticeClass& c) {
  switch (c.family) {
    case LatticeFamily::Zero: return DualLattice{};
    case LatticeFamily::EdgePlus: return make_edge_plus(c.m);
    case LatticeFamily::EdgeMinus: return make_edge_minus(c.n);
    case LatticeFamily::Lambda1: return make_lambda(1, c.m, c.n);
    case LatticeFamily::Lambda2: return make_lambda(2, c.m, c.n);
    case LatticeFamily::NonInvariant:
      throw std::invalid_argument("make_lattice: NonInvariant carries no parameters");
  }
  throw std::logic_error("make_lattice: bad family");
}

LatticeClass classify(const DualLattice& L) {
  if (L.rank() == 0) return LatticeClass{LatticeFamily::Zero, 0, 0};
  if (!L.is_invariant()) return LatticeClass{LatticeFamily::NonInvariant, 0, 0};
  if (L.rank() == 1) {
    const Vec2& u = L.basis()[0];
    if (u.b == u.a) return LatticeClass{LatticeFamily::EdgePlus, u.a, 0};
    if (u.b == -u.a) return LatticeClass{LatticeFamily::EdgeMinus, 0, u.a};
    throw std::logic_error("classify: invariant rank-1 lattice off both eigenlines");
  }
  // Meets with the two eigenlines recover the parameters: with rows
  // (p,q),(0,r), the least x > 0 with x(p -+ q) = 0 mod r gives m resp. n.
  Int m = diag_meet(L);
  Int n = antidiag_meet(L);
  Int idx = L.basis()[0].a * L.basis()[1].b;
  if (idx == 2 * m * n && make_lambda(1, m, n) == L)
    return LatticeClass{LatticeFamily::Lambda1, m, n};
  if (idx == m * n && (m + n) % 2 == 0 && make_lambda(2, m, n) == L)
    return LatticeClass{LatticeFamily::Lambda2, m, n};
  throw std::logic_error("classify: invariant rank-2 lattice outside both families");
}

bool is_cofree_in(const DualLattice& sub, const DualLattice& super) {
  if (!sub.subset_of(super)) return false;
  if (sub.rank() == 0) return true;

  // Coordinates of a super-member in super's basis (exact by containment).
  auto coords = [&super](const Vec2& v) -> std::vector<Int> {
    if (super.rank() == 1) {
      const Vec2& u = super.basis()[0];
      return {u.a != 0 ? Int(v.a / u.a) : Int(v.b / u.b)};
    }
    const Vec2& row0 = super.basis()[0];
    const Vec2& row1 = super.basis()[1];
    Int x = v.a / row0.a;
    Int y = (v.b - x * row0.b) / row1.b;
    return {x, y};
  };

  if (sub.rank() == 1) {
    std::vector<Int> c = coords(sub.basis()[0]);
    Int d = 0;
    for (const Int& e : c) d = gcd(d, e);
    return d == 1;
  }
  // sub and super both rank 2: elementary divisors 1 and |det| == index.
  std::vector<Int> c0 = coords(sub.basis()[0]);
  std::vector<Int> c1 = coords(sub.basis()[1]);
  Int det = abs(c0[0] * c1[1] - c0[1] * c1[0]);
  return det == 1;
}

std::vector<TaggedLattice> enumerate_invariant(const Int& max_index) {
  std::vector<TaggedLattice> out;
  for (Int m = 1; 2 * m <= max_index; ++m)
    for (Int n = 1; 2 * m * n <= max_index; ++n)
      out.push_back({make_lambda(1, m, n), LatticeClass{LatticeFamily::Lambda1, m, n}});
  for (Int m = 1; m <= max_index; ++m)
    for (Int n = (m % 2 == 1) ? Int(1) : Int(2); m * n <= max_index; n += 2)
      out.push_back({make_lambda(2, m, n), LatticeClass{LatticeFamily::Lambda2, m, n}});
  std::sort(out.begin(), out.end(), [](const TaggedLattice& x, const TaggedLattice& y) {
    auto key = [](const TaggedLattice& t) {
      return std::make_tuple(t.lattice.index().v, int(t.cls.family), t.cls.m, t.cls.n);
    };
    return key(x) < key(y);
  });
  return out;
}

std::string family_name(LatticeFamily f) {
  switch (f) {
    case LatticeFamily::Zero: return "Zero";
    case LatticeFamily::EdgePlus: return "EdgePlus";
    case LatticeFamily::EdgeMinus: return "EdgeMinus";
    case LatticeFamily::Lambda1: return "Lambda1";
    case LatticeFamily::Lambda2: return "Lambda2";
    case LatticeFamily::NonInvariant: return "NonInvariant";
  }
  return "?";
}

std::string to_string(const LatticeClass& c) {
  switch (c.family) {
    case LatticeFamily::Zero: return "Zero";
    case LatticeFamily::EdgePlus: return "EdgePlus(" + c.m.str() + ")";
    case LatticeFamily::EdgeMinus: return "EdgeMinus(" + c.n.str() + ")";
    case LatticeFamily::Lambda1: return "Lambda1(" + c.m.str() + "," + c.n.str() + ")";
    case LatticeFamily::Lambda2: return "Lambda2(" + c.m.str() + "," + c.n.str() + ")";
    case LatticeFamily::NonInvariant: return "NonInvariant";
  }
  return "?";
}

std::string to_string(const DualLattice& L) {
  LatticeClass c = classify(L);
  if (c.family != LatticeFamily::NonInvariant) return to_string(c);
  std::string s = "rows[";
  bool first = true;
  for (const Vec2& v : L.basis()) {
    if (!first) s += ",";
    first = false;
    s += "(" + v.a.str() + "," + v.b.str() + ")";
  }
  return s + "]";
}

Int diag_meet(const DualLattice& L) {
  if (L.rank() == 0) return 0;
  if (L.rank() == 1) {
    const Vec2& u = L.basis()[0];
    return u.a == u.b && u.a != 0 ? u.a : Int(0);
  }
  Int p = L.basis()[0].a, q = L.basis()[0].b, r = L.basis()[1].b;
  return p * r / gcd(r, p - q);
}

Int antidiag_meet(const DualLattice& L) {
  if (L.rank() == 0) return 0;
  if (L.rank() == 1) {
    const Vec2& u = L.basis()[0];
    return u.a == -u.b && u.a != 0 ? u.a : Int(0);
  }
  Int p = L.basis()[0].a, q = L.basis()[0].b, r = L.basis()[1].b;
  return p * r / gcd(r, p + q);
}

} // namespace u2
