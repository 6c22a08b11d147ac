#pragma once

#include "u2/lattice.hpp"
#include "u2/weyl.hpp"

#include <string>
#include <vector>

namespace u2 {

// Where the flag's symmetry is measured: inside the maximal-torus
// normalizer, or in the full unitary group.
enum class FlagAmbient { TorusNormalizer, UnitaryGroup };

std::string to_string(FlagAmbient a);

// An increasing chain of invariant lattices, cofree at every step (the
// annihilator picture of a descending cotoral chain of toral subgroups),
// together with the polynomial invariant ring and component group of its
// stabilizer in the chosen ambient group.
struct FlagData {
  std::vector<DualLattice> chain;  // strictly increasing, length 1..3
  FlagAmbient ambient = FlagAmbient::TorusNormalizer;
  bool central = false;            // first term annihilates a central subgroup
  std::string ring;                // "Q", "Q[c]", "Q[c,c']", "Q[c']", "Q[d']", "Q[c,d']"
  std::vector<int> codegrees;      // one per polynomial generator; c, c' are 2, d' is 4
  ComponentGroupKind component = ComponentGroupKind::Trivial;
  std::string ambient_map;         // ring change between the ambients; central flags only

  std::string to_json() const;
};

// Assigns ring and component data to a chain. The first term decides
// everything: its rank is the number of polynomial generators, and only
// chains starting at a central annihilator feel the ambient (the full
// group folds the two torus coordinates together, replacing c' by d' of
// twice the codegree and absorbing the swap component). Invalid chains
// (wrong length, non-invariant terms, non-increasing or non-cofree steps)
// throw std::invalid_argument.
FlagData flag_ring(const std::vector<DualLattice>& chain, FlagAmbient ambient);

// All valid chains of length 1..3 whose terms are drawn from the
// parameter-bounded invariant pool: Zero, the eigenlines with parameter
// <= M, and the two rank-2 families with both parameters <= M.
// Deterministic order: by length, then lexicographically in pool position.
std::vector<FlagData> enumerate_flags(const Int& M, FlagAmbient ambient);

}  // namespace u2
