#pragma once

#include "u2/subgroup.hpp"

#include <vector>

namespace u2 {
namespace model {

// (Z/k)^2 twisted by the coordinate swap:
//   (u, e) * (v, d) = (u + (e ? swap v : v), e xor d).
// Discrete stand-in for the diagonal maximal torus and its normalizer
// at torsion level k; element ids are ((a*k + b) << 1) | e.
struct ModelGroup {
  long long k;

  explicit ModelGroup(long long level);

  long long size() const { return 2 * k * k; }
  long long encode(long long a, long long b, int e) const;
  long long mul(long long x, long long y) const;
  long long inv(long long x) const;
};

// Torsion level holding the descriptor's standard realization and its
// predicted normalizer: 8 times the lcm of the finite position
// parameters (toral descriptors use their annihilator's exponent).
long long model_level(const SubgroupClass& K);

// Elements of the standard realization (sorted ids): toral descriptors
// as the full level-k character kernel, full descriptors as that kernel
// joined with the (possibly shifted) swap coset. Throws invalid_argument
// on descriptors without a monomial realization (central products,
// ambient) or when the level misses a required shift.
std::vector<long long> realize(const ModelGroup& G, const SubgroupClass& K);

// Subgroup generated by the given elements, as sorted ids.
std::vector<long long> closure(const ModelGroup& G, const std::vector<long long>& gens);

// |{ g in the model : g H g^-1 = H }| by exhaustive scan.
long long normalizer_order_serial(const ModelGroup& G, const std::vector<long long>& H);
long long normalizer_order_parallel(const ModelGroup& G, const std::vector<long long>& H);

// Size of the predicted normalizer's standard realization. Defined for
// toral descriptors and full descriptors away from n = 1 (there the true
// normalizer tilts out of the monomial subgroup). Throws otherwise.
long long predicted_normalizer_order(const ModelGroup& G, const SubgroupClass& K);

} // namespace model
} // namespace u2
