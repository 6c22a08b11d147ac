#pragma once

#include "u2/subgroup.hpp"

#include <functional>
#include <map>
#include <vector>

namespace u2 {

// The seven pieces of the subgroup space. The same ids name the pieces of
// the rotation-group space downstairs: T is the circle piece, N the
// dihedral piece, U2 the top piece, and the XZ pieces the exceptional
// finite groups with their centre extensions upstairs.
enum class BlockId { T, N, U2, A5Z, S4Z, A4Z, D4Z };

std::string to_string(BlockId b);

const std::vector<BlockId>& all_blocks();

struct Block {
  BlockId id = BlockId::T;
  SubgroupClass dominant; // largest class in the block; everything sits cotorally below it
  int dimension = 0;      // parameter dimension of the block's class space
};

Block block_info(BlockId b);

// Piece of the rotation-group partition: cyclic and circle classes, the
// dihedral tower with its limit, the four exceptional groups (the Klein
// group counts as exceptional), and the whole group.
BlockId so3_block_of(const SO3Class& c);

// Piece of the subgroup-space partition, by direct case analysis on the
// descriptor; agrees with lifting the projected class (validated below).
BlockId block_of(const SubgroupClass& k);

// Replaceable ingredients for partition validation, so tests can inject
// a broken rule and watch the validator catch it.
struct PartitionHooks {
  std::function<BlockId(const SubgroupClass&)> block_of;
  std::function<BlockId(const SO3Class&)> so3_block_of;
  std::function<SO3Class(const SubgroupClass&)> project;
  std::function<bool(const SubgroupClass&, const SubgroupClass&)> is_cotoral;

  PartitionHooks();
};

struct PartitionViolation {
  std::string kind; // "total", "projection-compatibility", "cotoral-closure"
  std::string k;
  std::string h; // second witness for pair checks, empty otherwise
};

struct PartitionReport {
  std::vector<PartitionViolation> violations;
  std::map<BlockId, long long> block_counts; // descriptors per block over the enumeration

  std::string to_json() const;
};

// Exhaustive check over enumerate_subgroups(M): the assignment is total,
// matches the projected partition, and never separates a cotoral pair.
// The all-pairs scan runs on the OpenMP kernel; the serial variant is the
// reference implementation and must produce an identical report.
PartitionReport validate_partition(const Int& M, const PartitionHooks& hooks = {});
PartitionReport validate_partition_serial(const Int& M, const PartitionHooks& hooks = {});

// The ring of rational functions on the finite-Weyl classes at truncation,
// carried by its block idempotents.
struct BurnsideFunctions {
  std::vector<SubgroupClass> classes;        // semantic forms, deduplicated, sorted by name
  std::vector<std::vector<Rat>> idempotents; // indexed like all_blocks(), one value per class

  std::vector<Rat> multiply(const std::vector<Rat>& f, const std::vector<Rat>& g) const;
  std::vector<Rat> add(const std::vector<Rat>& f, const std::vector<Rat>& g) const;
  std::vector<Rat> one() const;
  std::vector<Rat> zero() const;
};

// Classes with finite Weyl group at truncation M >= 1, with the seven
// indicator idempotents; verifies orthogonality, idempotence, and the
// partition of unity before returning.
BurnsideFunctions burnside_functions(const Int& M);

} // namespace u2
