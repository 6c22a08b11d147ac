#include "u2/blocks.hpp"

#include "u2/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

namespace u2 {

std::string to_string(BlockId b) {
  switch (b) {
    case BlockId::T: return "T";
    case BlockId::N: return "N";
    case BlockId::U2: return "U2";
    case BlockId::A5Z: return "A5Z";
    case BlockId::S4Z: return "S4Z";
    case BlockId::A4Z: return "A4Z";
    case BlockId::D4Z: return "D4Z";
  }
  return "?";
}

const std::vector<BlockId>& all_blocks() {
  static const std::vector<BlockId> ids{BlockId::T,   BlockId::N,   BlockId::U2, BlockId::A5Z,
                                        BlockId::S4Z, BlockId::A4Z, BlockId::D4Z};
  return ids;
}

Block block_info(BlockId b) {
  switch (b) {
    case BlockId::T: return {b, toral(DualLattice{}), 2};
    case BlockId::N: return {b, full(ExtInt::inf(), ExtInt::inf(), FullLambda::Split), 2};
    case BlockId::U2: return {b, ambient(), 1};
    case BlockId::A5Z: return {b, central_product(CentralType::A5, ExtInt::inf(), 0), 1};
    case BlockId::S4Z: return {b, central_product(CentralType::Sigma4, ExtInt::inf(), 0), 1};
    case BlockId::A4Z: return {b, central_product(CentralType::A4, ExtInt::inf(), 0), 1};
    case BlockId::D4Z: return {b, central_product(CentralType::D4, ExtInt::inf(), 0), 1};
  }
  throw std::invalid_argument("block_info: unknown block");
}

BlockId so3_block_of(const SO3Class& c) {
  switch (c.family) {
    case SO3Family::Cyclic:
    case SO3Family::SO2:
      return BlockId::T;
    case SO3Family::Dihedral:
      return c.n == 2 ? BlockId::D4Z : BlockId::N; // the Klein group is exceptional
    case SO3Family::O2:
      return BlockId::N;
    case SO3Family::A4: return BlockId::A4Z;
    case SO3Family::Sigma4: return BlockId::S4Z;
    case SO3Family::A5: return BlockId::A5Z;
    case SO3Family::SO3: return BlockId::U2;
  }
  throw std::invalid_argument("so3_block_of: unknown family");
}

BlockId block_of(const SubgroupClass& k) {
  if (std::holds_alternative<Toral>(k)) return BlockId::T;
  if (const auto* f = std::get_if<Full>(&k)) {
    if (f->n == ExtInt::of(1)) return BlockId::T; // abelian, conjugate into the torus
    if (f->n == ExtInt::of(2)) return BlockId::D4Z;
    return BlockId::N;
  }
  if (const auto* c = std::get_if<CentralProduct>(&k)) {
    switch (c->x) {
      case CentralType::SU2: return BlockId::U2;
      case CentralType::A5: return BlockId::A5Z;
      case CentralType::Sigma4: return BlockId::S4Z;
      case CentralType::A4: return BlockId::A4Z;
      case CentralType::D4: return BlockId::D4Z;
    }
  }
  return BlockId::U2; // ambient
}

PartitionHooks::PartitionHooks()
    : block_of(static_cast<BlockId (*)(const SubgroupClass&)>(&u2::block_of)),
      so3_block_of(static_cast<BlockId (*)(const SO3Class&)>(&u2::so3_block_of)),
      project(static_cast<SO3Class (*)(const SubgroupClass&)>(&u2::project)),
      is_cotoral(static_cast<bool (*)(const SubgroupClass&, const SubgroupClass&)>(
          &u2::is_cotoral)) {}

namespace {

PartitionReport validate_partition_impl(const Int& M, const PartitionHooks& hooks, bool parallel) {
  if (M < 1) throw std::invalid_argument("validate_partition: truncation must be positive");

  std::vector<SubgroupClass> all = enumerate_subgroups(M);
  PartitionReport report;
  for (BlockId b : all_blocks()) report.block_counts[b] = 0;

  std::vector<BlockId> assigned(all.size(), BlockId::T);
  std::vector<bool> ok(all.size(), false);
  for (size_t i = 0; i < all.size(); ++i) {
    try {
      assigned[i] = hooks.block_of(all[i]);
      ok[i] = true;
      report.block_counts[assigned[i]] += 1;
    } catch (const std::exception&) {
      report.violations.push_back({"total", to_string(all[i]), ""});
      continue;
    }
    BlockId composed = hooks.so3_block_of(hooks.project(all[i]));
    if (composed != assigned[i])
      report.violations.push_back({"projection-compatibility", to_string(all[i]), ""});
  }

  // All-pairs cotoral scan; rows are independent, so the parallel kernel
  // collects per-row hits and splices them in row order, keeping the
  // violation list identical to the serial reference.
  const long long n = static_cast<long long>(all.size());
  std::vector<std::vector<PartitionViolation>> rows(all.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long long i = 0; i < n; ++i) {
    if (!ok[static_cast<size_t>(i)]) continue;
    try {
      for (long long j = 0; j < n; ++j) {
        if (!ok[static_cast<size_t>(j)] || assigned[static_cast<size_t>(i)] == assigned[static_cast<size_t>(j)])
          continue;
        if (hooks.is_cotoral(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]))
          rows[static_cast<size_t>(i)].push_back(
              {"cotoral-closure", to_string(all[static_cast<size_t>(i)]), to_string(all[static_cast<size_t>(j)])});
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  for (auto& row : rows)
    for (auto& v : row) report.violations.push_back(std::move(v));

  return report;
}

}  // namespace

PartitionReport validate_partition(const Int& M, const PartitionHooks& hooks) {
  return validate_partition_impl(M, hooks, true);
}

PartitionReport validate_partition_serial(const Int& M, const PartitionHooks& hooks) {
  return validate_partition_impl(M, hooks, false);
}

std::string PartitionReport::to_json() const {
  nlohmann::json j;
  j["violations"] = nlohmann::json::array();
  for (const PartitionViolation& v : violations) {
    nlohmann::json e{{"kind", v.kind}, {"k", v.k}};
    if (!v.h.empty()) e["h"] = v.h;
    j["violations"].push_back(e);
  }
  j["blocks"] = nlohmann::json::object();
  for (const auto& [id, count] : block_counts) j["blocks"][to_string(id)] = count;
  return j.dump(2);
}

std::vector<Rat> BurnsideFunctions::multiply(const std::vector<Rat>& f,
                                             const std::vector<Rat>& g) const {
  std::vector<Rat> out(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

std::vector<Rat> BurnsideFunctions::add(const std::vector<Rat>& f,
                                        const std::vector<Rat>& g) const {
  std::vector<Rat> out(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) out[i] = f[i] + g[i];
  return out;
}

std::vector<Rat> BurnsideFunctions::one() const { return std::vector<Rat>(classes.size(), 1); }
std::vector<Rat> BurnsideFunctions::zero() const { return std::vector<Rat>(classes.size(), 0); }

BurnsideFunctions burnside_functions(const Int& M) {
  if (M < 1) throw std::invalid_argument("burnside_functions: truncation must be positive");

  // finite-Weyl classes at truncation, one representative per semantic form
  std::set<std::string> seen;
  std::vector<SubgroupClass> classes;
  for (const SubgroupClass& k : enumerate_subgroups(M)) {
    SubgroupClass s = semantic_form(k);
    if (weyl(s).identity_rank != 0) continue;
    if (!seen.insert(to_string(s)).second) continue;
    classes.push_back(s);
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return to_string(a) < to_string(b);
  });

  BurnsideFunctions alg;
  alg.classes = classes;
  for (BlockId b : all_blocks()) {
    std::vector<Rat> e(classes.size(), 0);
    for (size_t i = 0; i < classes.size(); ++i)
      if (block_of(classes[i]) == b) e[i] = 1;
    alg.idempotents.push_back(std::move(e));
  }

  // partition-of-unity laws; structural, so a failure is a programming error
  std::vector<Rat> sum = alg.zero();
  for (size_t a = 0; a < alg.idempotents.size(); ++a) {
    if (alg.multiply(alg.idempotents[a], alg.idempotents[a]) != alg.idempotents[a])
      throw std::logic_error("burnside_functions: idempotence failed");
    for (size_t b = a + 1; b < alg.idempotents.size(); ++b)
      if (alg.multiply(alg.idempotents[a], alg.idempotents[b]) != alg.zero())
        throw std::logic_error("burnside_functions: orthogonality failed");
    sum = alg.add(sum, alg.idempotents[a]);
  }
  if (sum != alg.one()) throw std::logic_error("burnside_functions: partition of unity failed");

  return alg;
}

} // namespace u2
