#pragma once

#include "u2/subgroup.hpp"

#include <vector>

namespace u2 {

// Finite groups that occur as component groups of normalizer quotients
// (and as symmetry groups of the model structures built on them).
enum class ComponentGroupKind { Trivial, C2, C3, C2xC2, Sigma3 };

int component_order(ComponentGroupKind g);
std::string to_string(ComponentGroupKind g);

// Shape of the identity component W^e of the normalizer quotient N(K)/K:
// a torus of the stated rank, the rotation group SO(3), or the full
// ambient quotient with rank 2. The flavor fixes the coefficient ring
// H^*(B W^e): Q / Q[c] / Q[c,c'] for tori, Q[d'] for SO3, Q[c,d'] for U2.
enum class WeylFlavor { Torus, SO3, U2 };

// How the component group acts on the generators of H^*(B W^e).
enum class WeylTwist { None, NegateC, SwapCC };

struct WeylData {
  int identity_rank = 0;
  WeylFlavor flavor = WeylFlavor::Torus;
  ComponentGroupKind component = ComponentGroupKind::Trivial;
  WeylTwist twist = WeylTwist::None;

  bool operator==(const WeylData&) const = default;
};

// "Q", "Q[c]", "Q[c,c']", "Q[d']", "Q[c,d']" (degrees: c, c' in 2; d' in 4)
std::string ring_string(const WeylData& w);

std::string to_string(const WeylData& w);

// Normalizer quotient data N(K)/K for every descriptor; total.
WeylData weyl(const SubgroupClass& k);

// Class of the normalizer N(K), in the table's own spelling: results on
// full-grid inputs stay written as Full descriptors even where those
// coincide with central products (see semantic_form for the folding).
SubgroupClass normalizer(const SubgroupClass& k);

// Component group of the SO(3)-normalizer quotient of the projected group.
ComponentGroupKind so3_weyl_component(CentralType x);

// Lift of N_SO3 at the projection: A4 and D4 normalize into Sigma4.
CentralType cp_normalizer_type(CentralType x);

struct FullClassCount {
  int preimage_classes; // conjugacy classes inside the preimage of N_SO3
  int fused_classes;    // after conjugacy in the whole unitary group
};

// preimage_classes counts characters of the projected group's
// abelianization; fused_classes counts orbits of the SO(3) Weyl action
// on those characters (computed from the stored action, not tabulated).
FullClassCount count_full_classes(CentralType x);

// Sizes of those orbits; the trivial character's orbit (always a fixed
// point) comes first, the rest ordered by smallest member.
std::vector<long long> fused_orbit_sizes(CentralType x);

// Same conjugacy class in the ambient group. Works descriptor-wise on
// semantic forms: toral classes match up to the swap, full descriptors
// must agree on the nose, central products fuse exactly where the Weyl
// action above identifies their variants. Never true across tags.
bool fuse(const SubgroupClass& a, const SubgroupClass& b);

} // namespace u2
