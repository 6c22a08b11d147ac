#pragma once

#include "u2/lattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace u2 {

// Closed subgroup classes of SO(3), used as projection targets.
// Dihedral stores the half-order n (group order 2n) with n >= 2; the
// degenerate dihedral of order 2 is normalized away to Cyclic(2).
// Dihedral(n=2) is the order-4 Klein group, which sits in its own block.
enum class SO3Family { Cyclic, Dihedral, SO2, O2, A4, Sigma4, A5, SO3 };

struct SO3Class {
    SO3Family family = SO3Family::SO3;
    Int n = 0; // order for Cyclic, half-order for Dihedral, else unused (0)

    bool operator==(const SO3Class&) const = default;
};

SO3Class so3_cyclic(const Int& n);       // n >= 1
SO3Class so3_dihedral_2n(const Int& n);  // group order 2n; n == 1 folds to Cyclic(2)
SO3Class so3_point(SO3Family f);         // SO2, O2, A4, Sigma4, A5, SO3

std::string to_string(const SO3Class& c);

// K cotoral in H at the SO(3) level: equality, or a finite cyclic group
// inside the circle.
bool so3_is_cotoral(const SO3Class& k, const SO3Class& h);

// ---------------------------------------------------------------------------
// Conjugacy classes of closed subgroups of U(2), by descriptor.
//
// Toral: subgroup of the diagonal torus, recorded by its annihilator
//   lattice (the characters it kills). Bigger lattice = smaller subgroup.
// Full: preimage in the diagonal normalizer of a graph subgroup, located
//   by a pair (m, n) with m indexing the determinant direction and n the
//   anti-diagonal direction; lambda picks the extension by the swap.
// CentralProduct: (finite linear group) x_{C2} (centre of order 2s), for
//   the five lifts listed in CentralType; variant indexes the genuinely
//   distinct conjugacy classes sharing the same centre order.
// Ambient: all of U(2).
// ---------------------------------------------------------------------------

enum class FullLambda { Split, NonSplit, TypeTwo };

enum class CentralType { SU2, A5, Sigma4, A4, D4 };

struct Toral {
    DualLattice dagger;
    bool operator==(const Toral&) const = default;
};

struct Full {
    ExtInt m;
    ExtInt n;
    FullLambda lambda = FullLambda::Split;
    bool operator==(const Full&) const = default;
};

struct CentralProduct {
    CentralType x = CentralType::SU2;
    ExtInt s;
    int variant = 0;
    bool operator==(const CentralProduct&) const = default;
};

struct Ambient {
    bool operator==(const Ambient&) const = default;
};

using SubgroupClass = std::variant<Toral, Full, CentralProduct, Ambient>;

SubgroupClass toral(DualLattice dagger);
SubgroupClass full(ExtInt m, ExtInt n, FullLambda lambda);
SubgroupClass central_product(CentralType x, ExtInt s, int variant = 0);
SubgroupClass ambient();

std::string to_string(FullLambda lambda);     // "1s", "1ns", "2"
std::string to_string(CentralType x);         // "SU2", "A5", "Sigma4", "A4", "D4"
std::string to_string(const SubgroupClass& k);

// Order of the abelianization of the finite SO(3) lift; also the number
// of central-product variants at each finite centre order.
int abelianization_order(CentralType x);

// Grammar invariants: lambda legality per position (NonSplit needs finite m,
// TypeTwo needs finite m, n of equal parity), variant ranges for central
// products. Toral and Ambient descriptors are always valid.
bool is_valid(const SubgroupClass& k);

// True when the descriptor names an abelian group: every Toral, and Full
// with n = 1 (the swap acts trivially on the fixed eigen-line there).
bool is_abelian(const SubgroupClass& k);
bool is_abelian_full(const ExtInt& m, const ExtInt& n);

// Annihilator lattice of the diagonal form of the abelian group Full(m,1,*).
// Split: C_{2m} x C_2; NonSplit: C_{4m}; TypeTwo (odd m): C_{2m} sitting
// askew, with a non-invariant annihilator. m = inf gives the line <(2,-2)>.
DualLattice abelian_full_avatar(const ExtInt& m, FullLambda lambda);

// Rewrites descriptors whose class coincides with one of another tag:
// Full(m,1,*) -> Toral(avatar), Full(inf,2) -> CP(D4,inf,0),
// CP(SU2,inf) -> Ambient. Idempotent; everything else passes through.
SubgroupClass semantic_form(const SubgroupClass& k);

// Order of the intersection with the centre of U(2).
ExtInt centre_order(const SubgroupClass& k);

// Image in PU(2) = SO(3).
SO3Class project(const SubgroupClass& k);

// K normal in H with H/K a torus, at the level of classes (up to
// conjugacy on both sides). Reflexive; within Toral it is exactly
// dagger-reversed cofreeness up to the swap.
bool is_cotoral(const SubgroupClass& k, const SubgroupClass& h);

// Every descriptor with all finite parameters bounded by max_param:
// toral lattices (invariant families by parameter, plus every other
// canonical lattice with entries bounded by max_param), full positions
// with their legal lambdas, central products, Ambient, and the
// infinite-parameter descriptors over each bounded column. Descriptors
// are unique; classes may still coincide across tags (see semantic_form).
std::vector<SubgroupClass> enumerate_subgroups(const Int& max_param);

} // namespace u2
