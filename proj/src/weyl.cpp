#include "u2/weyl.hpp"

#include <array>
#include <stdexcept>

namespace u2 {

int component_order(ComponentGroupKind g) {
  switch (g) {
    case ComponentGroupKind::Trivial: return 1;
    case ComponentGroupKind::C2: return 2;
    case ComponentGroupKind::C3: return 3;
    case ComponentGroupKind::C2xC2: return 4;
    case ComponentGroupKind::Sigma3: return 6;
  }
  return 0;
}

std::string to_string(ComponentGroupKind g) {
  switch (g) {
    case ComponentGroupKind::Trivial: return "1";
    case ComponentGroupKind::C2: return "C2";
    case ComponentGroupKind::C3: return "C3";
    case ComponentGroupKind::C2xC2: return "C2xC2";
    case ComponentGroupKind::Sigma3: return "Sigma3";
  }
  return "?";
}

std::string ring_string(const WeylData& w) {
  switch (w.flavor) {
    case WeylFlavor::SO3: return "Q[d']";
    case WeylFlavor::U2: return "Q[c,d']";
    case WeylFlavor::Torus:
      if (w.identity_rank == 0) return "Q";
      if (w.identity_rank == 1) return "Q[c]";
      return "Q[c,c']";
  }
  return "?";
}

std::string to_string(const WeylData& w) {
  std::string twist;
  switch (w.twist) {
    case WeylTwist::None: twist = "none"; break;
    case WeylTwist::NegateC: twist = "negate-c"; break;
    case WeylTwist::SwapCC: twist = "swap-cc'"; break;
  }
  return "rank " + std::to_string(w.identity_rank) + ", ring " + ring_string(w) +
         ", components " + to_string(w.component) + ", twist " + twist;
}

ComponentGroupKind so3_weyl_component(CentralType x) {
  switch (x) {
    case CentralType::SU2: return ComponentGroupKind::Trivial;  // SO(3) is all of it
    case CentralType::A5: return ComponentGroupKind::Trivial;   // maximal, self-normalizing
    case CentralType::Sigma4: return ComponentGroupKind::Trivial;
    case CentralType::A4: return ComponentGroupKind::C2;        // index 2 in Sigma4
    case CentralType::D4: return ComponentGroupKind::Sigma3;    // Sigma4 / Klein
  }
  return ComponentGroupKind::Trivial;
}

CentralType cp_normalizer_type(CentralType x) {
  switch (x) {
    case CentralType::A4:
    case CentralType::D4:
      return CentralType::Sigma4;
    default:
      return x;
  }
}

namespace {

const Vec2 kAntidiagonal{1, -1};

WeylData weyl_toral(const DualLattice& L) {
  if (L.contains(kAntidiagonal)) {
    // subgroup of the centre; the quotient keeps the whole ambient group
    if (L.rank() == 1) return {1, WeylFlavor::SO3, ComponentGroupKind::Trivial, WeylTwist::None};
    return {2, WeylFlavor::U2, ComponentGroupKind::Trivial, WeylTwist::None};
  }
  if (!L.is_invariant())
    return {L.rank(), WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None};

  WeylTwist twist = WeylTwist::None;
  if (L.rank() == 2) {
    twist = WeylTwist::SwapCC;
  } else if (L.rank() == 1 && L.basis()[0].b == -L.basis()[0].a) {
    twist = WeylTwist::NegateC; // the surviving circle coordinate is inverted by the swap
  }
  return {L.rank(), WeylFlavor::Torus, ComponentGroupKind::C2, twist};
}

} // namespace

WeylData weyl(const SubgroupClass& k0) {
  SubgroupClass k = semantic_form(k0);

  if (const auto* t = std::get_if<Toral>(&k)) return weyl_toral(t->dagger);

  if (const auto* f = std::get_if<Full>(&k)) {
    if (f->m.finite && f->n.finite) {
      // quotient of the double-index diagonal circle family by a finite group
      ComponentGroupKind pi0 = f->lambda == FullLambda::TypeTwo ? ComponentGroupKind::Trivial
                                                                : ComponentGroupKind::C2;
      return {1, WeylFlavor::Torus, pi0, WeylTwist::None};
    }
    if (f->m.finite) // (m, inf): normal in the diagonal normalizer
      return {1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None};
    if (f->n.finite) // (inf, n), n >= 3 after semantic_form
      return {0, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None};
    return {0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None};
  }

  if (const auto* c = std::get_if<CentralProduct>(&k)) {
    if (c->x == CentralType::SU2) // finite s after semantic_form
      return {1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None};
    if (!c->s.finite)
      return {0, WeylFlavor::Torus, so3_weyl_component(c->x), WeylTwist::None};
    if (c->variant == 0)
      return {1, WeylFlavor::Torus, so3_weyl_component(c->x), WeylTwist::None};
    // a marked character cuts the normalizer down to its stabilizer
    ComponentGroupKind stab = c->x == CentralType::D4 ? ComponentGroupKind::C2
                                                      : ComponentGroupKind::Trivial;
    return {1, WeylFlavor::Torus, stab, WeylTwist::None};
  }

  return {0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None}; // ambient
}

SubgroupClass normalizer(const SubgroupClass& k0) {
  SubgroupClass k = semantic_form(k0);

  if (const auto* t = std::get_if<Toral>(&k)) {
    if (t->dagger.contains(kAntidiagonal)) return ambient();
    if (t->dagger.is_invariant())
      return full(ExtInt::inf(), ExtInt::inf(), FullLambda::Split);
    return toral(DualLattice{}); // only the torus itself survives off the swap axis
  }

  if (const auto* f = std::get_if<Full>(&k)) {
    if (f->m.finite && f->n.finite) {
      Int n = f->n.v;
      return f->lambda == FullLambda::TypeTwo
                 ? full(ExtInt::inf(), ExtInt::of(n), FullLambda::Split)
                 : full(ExtInt::inf(), ExtInt::of(2 * n), FullLambda::Split);
    }
    if (f->m.finite) return full(ExtInt::inf(), ExtInt::inf(), FullLambda::Split);
    if (f->n.finite) // (inf, n >= 3)
      return full(ExtInt::inf(), ExtInt::of(2 * f->n.v), FullLambda::Split);
    return k; // the diagonal normalizer is self-normalizing
  }

  if (const auto* c = std::get_if<CentralProduct>(&k)) {
    if (c->x == CentralType::SU2) return ambient();
    if (!c->s.finite || c->variant == 0)
      return central_product(cp_normalizer_type(c->x), ExtInt::inf(), 0);
    if (c->x == CentralType::D4) // marked Klein characters normalize monomially
      return full(ExtInt::inf(), ExtInt::of(4), FullLambda::Split);
    return central_product(c->x, ExtInt::inf(), 0);
  }

  return ambient();
}

namespace {

// Character data of the projected group's abelianization, with the
// W_SO3-action given by permutation generators on the character list.
struct CharacterAction {
  int size = 1;
  std::vector<std::array<int, 4>> generators; // permutations of 0..size-1
};

CharacterAction character_action(CentralType x) {
  switch (x) {
    case CentralType::SU2:
    case CentralType::A5:
      return {1, {}};
    case CentralType::Sigma4:
      return {2, {}}; // sign character, fixed by the trivial Weyl group
    case CentralType::A4:
      // C3 characters; the outer involution inverts the cube roots
      return {3, {{0, 2, 1, 0}}};
    case CentralType::D4:
      // Klein characters; Sigma3 permutes the three nontrivial ones
      return {4, {{0, 2, 1, 3}, {0, 2, 3, 1}}};
  }
  return {1, {}};
}

} // namespace

FullClassCount count_full_classes(CentralType x) {
  CharacterAction act = character_action(x);

  std::vector<int> orbit_of(act.size, -1);
  int orbits = 0;
  for (int start = 0; start < act.size; ++start) {
    if (orbit_of[start] != -1) continue;
    // breadth-first closure under the generators
    std::vector<int> frontier{start};
    orbit_of[start] = orbits;
    while (!frontier.empty()) {
      int e = frontier.back();
      frontier.pop_back();
      for (const auto& g : act.generators) {
        if (orbit_of[g[e]] != -1) continue;
        orbit_of[g[e]] = orbits;
        frontier.push_back(g[e]);
      }
    }
    ++orbits;
  }

  return FullClassCount{act.size, orbits};
}

std::vector<long long> fused_orbit_sizes(CentralType x) {
  CharacterAction act = character_action(x);

  std::vector<int> orbit_of(act.size, -1);
  std::vector<long long> sizes;
  for (int start = 0; start < act.size; ++start) {
    if (orbit_of[start] != -1) continue;
    std::vector<int> frontier{start};
    orbit_of[start] = static_cast<int>(sizes.size());
    long long count = 1;
    while (!frontier.empty()) {
      int e = frontier.back();
      frontier.pop_back();
      for (const auto& g : act.generators) {
        if (orbit_of[g[e]] != -1) continue;
        orbit_of[g[e]] = static_cast<int>(sizes.size());
        frontier.push_back(g[e]);
        ++count;
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

bool fuse(const SubgroupClass& a0, const SubgroupClass& b0) {
  SubgroupClass a = semantic_form(a0);
  SubgroupClass b = semantic_form(b0);
  if (a.index() != b.index()) return false;

  if (const auto* ta = std::get_if<Toral>(&a)) {
    const auto& tb = std::get<Toral>(b);
    return ta->dagger == tb.dagger || ta->dagger == tb.dagger.w_image();
  }
  if (std::holds_alternative<Full>(a)) return a == b;
  if (const auto* ca = std::get_if<CentralProduct>(&a)) {
    const auto& cb = std::get<CentralProduct>(b);
    if (ca->x != cb.x || !(ca->s == cb.s)) return false;
    if (ca->variant == cb.variant) return true;
    // nontrivial characters in one Weyl orbit name conjugate subgroups
    if (ca->variant == 0 || cb.variant == 0) return false;
    return ca->x == CentralType::A4 || ca->x == CentralType::D4;
  }
  return true; // ambient
}

} // namespace u2
