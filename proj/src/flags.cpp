#include "u2/flags.hpp"

#include <json.hpp>

#include <stdexcept>

namespace u2 {

std::string to_string(FlagAmbient a) {
  return a == FlagAmbient::TorusNormalizer ? "torus-normalizer" : "unitary-group";
}

FlagData flag_ring(const std::vector<DualLattice>& chain, FlagAmbient ambient) {
  if (chain.empty() || chain.size() > 3) throw std::invalid_argument("flag_ring: chain length must be 1, 2 or 3");
  for (size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_invariant()) throw std::invalid_argument("flag_ring: term " + std::to_string(i) + " is not swap-invariant");
    if (i + 1 < chain.size()) {
      if (chain[i] == chain[i + 1]) throw std::invalid_argument("flag_ring: chain is not strictly increasing");
      if (!is_cofree_in(chain[i], chain[i + 1]))
        throw std::invalid_argument("flag_ring: step " + std::to_string(i) + " is not a cofree inclusion");
    }
  }

  FlagData f;
  f.chain = chain;
  f.ambient = ambient;
  // The first term annihilates the largest subgroup of the chain; the
  // chain's joint stabilizer is that subgroup's normalizer, because every
  // later term is automatic: noncentral chains stay inside the torus
  // normalizer where invariance is all that is needed, central chains put
  // the whole flag under the full group.
  const DualLattice& l0 = chain.front();
  f.central = l0.contains(Vec2{1, -1});
  int r = l0.rank();
  if (!f.central) {
    f.ring = r == 0 ? "Q" : (r == 1 ? "Q[c]" : "Q[c,c']");
    f.codegrees = std::vector<int>(static_cast<size_t>(r), 2);
    f.component = ComponentGroupKind::C2;
    f.ambient_map = "";
    return f;
  }
  // Central annihilators have rank >= 1: they contain the antidiagonal.
  if (ambient == FlagAmbient::TorusNormalizer) {
    f.ring = r == 1 ? "Q[c']" : "Q[c,c']";
    f.codegrees = std::vector<int>(static_cast<size_t>(r), 2);
    f.component = ComponentGroupKind::C2;
  } else {
    f.ring = r == 1 ? "Q[d']" : "Q[c,d']";
    f.codegrees = r == 1 ? std::vector<int>{4} : std::vector<int>{2, 4};
    f.component = ComponentGroupKind::Trivial;
  }
  f.ambient_map = "d' -> (c')^2";
  return f;
}

namespace {

std::vector<DualLattice> invariant_pool(const Int& M) {
  std::vector<DualLattice> pool;
  pool.push_back(DualLattice());
  for (Int m = 1; m <= M; ++m) pool.push_back(make_edge_plus(m));
  for (Int n = 1; n <= M; ++n) pool.push_back(make_edge_minus(n));
  for (Int m = 1; m <= M; ++m)
    for (Int n = 1; n <= M; ++n) pool.push_back(make_lambda(1, m, n));
  for (Int m = 1; m <= M; ++m)
    for (Int n = 1; n <= M; ++n)
      if ((m + n) % 2 == 0) pool.push_back(make_lambda(2, m, n));
  return pool;
}

}  // namespace

std::vector<FlagData> enumerate_flags(const Int& M, FlagAmbient ambient) {
  if (M < 1) throw std::invalid_argument("enumerate_flags: truncation must be positive");
  std::vector<DualLattice> pool = invariant_pool(M);
  size_t n = pool.size();
  // A valid step raises the rank, so chains follow pool positions freely;
  // validity is exactly strict cofree inclusion on consecutive terms.
  auto step_ok = [&](size_t i, size_t j) {
    return !(pool[i] == pool[j]) && is_cofree_in(pool[i], pool[j]);
  };
  std::vector<FlagData> out;
  for (size_t i = 0; i < n; ++i) out.push_back(flag_ring({pool[i]}, ambient));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (step_ok(i, j)) out.push_back(flag_ring({pool[i], pool[j]}, ambient));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!step_ok(i, j)) continue;
      for (size_t k = 0; k < n; ++k)
        if (step_ok(j, k)) out.push_back(flag_ring({pool[i], pool[j], pool[k]}, ambient));
    }
  return out;
}

std::string FlagData::to_json() const {
  nlohmann::json j;
  j["chain"] = nlohmann::json::array();
  for (const DualLattice& l : chain) j["chain"].push_back(to_string(l));
  j["ambient"] = to_string(ambient);
  j["central"] = central;
  j["ring"] = ring;
  j["codegrees"] = codegrees;
  j["component"] = to_string(component);
  if (!ambient_map.empty()) j["ambient_map"] = ambient_map;
  return j.dump(2);
}

}  // namespace u2
