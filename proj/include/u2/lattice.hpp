#pragma once

#include "u2/intmath.hpp"
#include <string>
#include <vector>

namespace u2 {

// Vector in Z^2, coordinates with respect to the basis {1, w}.
// w acts by coordinate swap.
struct Vec2 {
  Int a = 0, b = 0;

  bool operator==(const Vec2&) const = default;
  Vec2 swapped() const { return Vec2{b, a}; }
  Vec2 operator+(const Vec2& o) const { return Vec2{a + o.a, b + o.b}; }
  Vec2 operator-(const Vec2& o) const { return Vec2{a - o.a, b - o.b}; }
  Vec2 operator-() const { return Vec2{-a, -b}; }
};

// Sublattice of Z^2 in row Hermite form.
//   rank 2: rows (p,q),(0,r) with p,r > 0 and 0 <= q < r
//   rank 1: one row, leading nonzero entry positive
//   rank 0: no rows
// Canonical form is unique per lattice, so equality is memberwise.
class DualLattice {
public:
  DualLattice() = default; // the Zero lattice
  static DualLattice from_generators(const std::vector<Vec2>& gens);

  int rank() const { return rank_; }
  const std::vector<Vec2>& basis() const { return rows_; }

  bool contains(const Vec2& v) const;
  bool subset_of(const DualLattice& other) const;
  ExtInt index() const; // [Z^2 : L]; infinite for rank < 2

  DualLattice w_image() const;
  bool is_invariant() const;

  bool operator==(const DualLattice&) const = default;
  bool operator<(const DualLattice& o) const; // arbitrary total order, for sets/sorting

private:
  int rank_ = 0;
  std::vector<Vec2> rows_;
};

enum class LatticeFamily { Zero, EdgePlus, EdgeMinus, Lambda1, Lambda2, NonInvariant };

// Taxonomy of a lattice under the swap action: the W-invariant ones are
// Zero, the two eigenlines (m(1+w) and n(1-w)), and the two rank-2 families.
struct LatticeClass {
  LatticeFamily family = LatticeFamily::Zero;
  Int m = 0, n = 0; // EdgePlus uses m, EdgeMinus uses n, Lambda families use both

  bool operator==(const LatticeClass&) const = default;
};

DualLattice canonicalize(const std::vector<Vec2>& gens);

// Lambda_1(m,n) = <m(1+w), n(1-w)>, index 2mn.
// Lambda_2(m,n) = Lambda_1 + <((m+n)/2, (m-n)/2)>, index mn; needs m+n, m-n even.
DualLattice make_lambda(int family, const Int& m, const Int& n);
DualLattice make_edge_plus(const Int& m);
DualLattice make_edge_minus(const Int& n);
DualLattice make_lattice(const LatticeClass& c);

LatticeClass classify(const DualLattice& L);

// sub <= super with torsion-free quotient (all elementary divisors of the
// inclusion matrix are 1 on the shared rank). Dual notion of a cotoral
// inclusion of subgroups.
bool is_cofree_in(const DualLattice& sub, const DualLattice& super);

struct TaggedLattice {
  DualLattice lattice;
  LatticeClass cls;
};

// All rank-2 W-invariant sublattices of index <= max_index, classified,
// in a deterministic order.
std::vector<TaggedLattice> enumerate_invariant(const Int& max_index);

std::string family_name(LatticeFamily f);

// Family spelling when invariant ("Lambda1(2,3)"), basis rows otherwise.
std::string to_string(const DualLattice& L);
std::string to_string(const LatticeClass& c);

// Least t > 0 with t*(1,1) in L (0 when the diagonal meets L trivially).
Int diag_meet(const DualLattice& L);
// Least t > 0 with t*(1,-1) in L (0 when the antidiagonal meets L trivially).
Int antidiag_meet(const DualLattice& L);

} // namespace u2
