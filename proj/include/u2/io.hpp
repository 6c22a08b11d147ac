#pragma once

#include "u2/lattice.hpp"
#include "u2/subgroup.hpp"

#include <string>

namespace u2 {

// JSON forms used by the command line and the schema files:
//   lattice        {"rank": r, "basis": [[a, b], ...]}        (canonical form)
//   lattice class  {"family": "Lambda1", "m": 2, "n": 3}
//   subgroup       {"kind": "toral"|"full"|"central_product"|"ambient", ...}
// Position parameters serialize as integers, infinity as the string "inf".
// Parsers throw std::invalid_argument on malformed input.

std::string lattice_to_json(const DualLattice& l);
DualLattice lattice_from_json(const std::string& text);

std::string lattice_class_to_json(const LatticeClass& c);

std::string subgroup_to_json(const SubgroupClass& k);
SubgroupClass subgroup_from_json(const std::string& text);

}  // namespace u2
