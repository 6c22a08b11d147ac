#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u2/flags.hpp"

#include <stdexcept>

using namespace u2;

namespace {

FlagData tn(const std::vector<DualLattice>& chain) { return flag_ring(chain, FlagAmbient::TorusNormalizer); }
FlagData un(const std::vector<DualLattice>& chain) { return flag_ring(chain, FlagAmbient::UnitaryGroup); }

}  // namespace

TEST_CASE("single central lattices feel the ambient group") {
  DualLattice z3 = make_lambda(2, 3, 1);  // contains the antidiagonal
  FlagData a = tn({z3});
  CHECK(a.central);
  CHECK(a.ring == "Q[c,c']");
  CHECK(a.component == ComponentGroupKind::C2);
  CHECK(a.codegrees == std::vector<int>{2, 2});
  CHECK(a.ambient_map == "d' -> (c')^2");

  FlagData b = un({z3});
  CHECK(b.central);
  CHECK(b.ring == "Q[c,d']");
  CHECK(b.component == ComponentGroupKind::Trivial);
  CHECK(b.codegrees == std::vector<int>{2, 4});
  CHECK(b.ambient_map == "d' -> (c')^2");

  DualLattice anti = make_edge_minus(1);
  CHECK(tn({anti}).ring == "Q[c']");
  CHECK(tn({anti}).codegrees == std::vector<int>{2});
  CHECK(un({anti}).ring == "Q[d']");
  CHECK(un({anti}).codegrees == std::vector<int>{4});
  CHECK(un({anti}).component == ComponentGroupKind::Trivial);
}

TEST_CASE("noncentral chains ignore the ambient group") {
  DualLattice l = make_lambda(1, 2, 3);
  FlagData a = tn({l}), b = un({l});
  CHECK(!a.central);
  CHECK(a.ring == "Q[c,c']");
  CHECK(a.component == ComponentGroupKind::C2);
  CHECK(a.ambient_map.empty());
  CHECK(a.ring == b.ring);
  CHECK(a.component == b.component);
  CHECK(a.codegrees == b.codegrees);

  CHECK(tn({DualLattice()}).ring == "Q");
  CHECK(tn({make_edge_plus(2)}).ring == "Q[c]");
  CHECK(tn({make_edge_plus(2)}).codegrees == std::vector<int>{2});
}

TEST_CASE("chain admissibility") {
  DualLattice zero;
  DualLattice ep1 = make_edge_plus(1);
  DualLattice em1 = make_edge_minus(1);
  DualLattice l11 = make_lambda(1, 1, 1);
  DualLattice full = make_lambda(2, 1, 1);

  CHECK_NOTHROW(tn({zero, ep1, l11}));
  CHECK_NOTHROW(tn({zero, ep1, full}));
  CHECK_NOTHROW(tn({em1, l11}));
  CHECK_NOTHROW(un({zero, em1, full}));

  // index-2 inclusion of rank-2 lattices is not cofree
  CHECK_THROWS_AS(tn({l11, full}), std::invalid_argument);
  // contained but with a torsion quotient on the shared rank
  CHECK_THROWS_AS(tn({make_edge_plus(2), l11}), std::invalid_argument);
  // not contained at all
  CHECK_THROWS_AS(tn({ep1, em1}), std::invalid_argument);
  // not swap-invariant
  CHECK_THROWS_AS(tn({canonicalize({Vec2{1, 0}})}), std::invalid_argument);
  // not strictly increasing
  CHECK_THROWS_AS(tn({l11, l11}), std::invalid_argument);
  CHECK_THROWS_AS(tn({}), std::invalid_argument);
  CHECK_THROWS_AS(tn({zero, ep1, l11, full}), std::invalid_argument);
}

TEST_CASE("flag census at truncation one") {
  auto flags = enumerate_flags(1, FlagAmbient::TorusNormalizer);
  CHECK(flags.size() == 17);
  int central = 0;
  int len1 = 0, len2 = 0, len3 = 0;
  for (const FlagData& f : flags) {
    if (f.central) ++central;
    if (f.chain.size() == 1) ++len1;
    if (f.chain.size() == 2) ++len2;
    if (f.chain.size() == 3) ++len3;
  }
  CHECK(central == 5);
  CHECK(len1 == 5);
  CHECK(len2 == 8);
  CHECK(len3 == 4);
  CHECK_THROWS_AS(enumerate_flags(0, FlagAmbient::TorusNormalizer), std::invalid_argument);
}

TEST_CASE("flag laws across the pool") {
  for (FlagAmbient amb : {FlagAmbient::TorusNormalizer, FlagAmbient::UnitaryGroup}) {
    auto flags = enumerate_flags(2, amb);
    for (const FlagData& f : flags) {
      // the polynomial generator count matches the stabilizer's torus rank
      WeylData wd = weyl(toral(f.chain.front()));
      CHECK(static_cast<int>(f.codegrees.size()) == wd.identity_rank);

      FlagData other = flag_ring(f.chain, amb == FlagAmbient::TorusNormalizer
                                              ? FlagAmbient::UnitaryGroup
                                              : FlagAmbient::TorusNormalizer);
      if (f.central) {
        CHECK(f.ambient_map == "d' -> (c')^2");
        CHECK(other.ambient_map == f.ambient_map);
        bool here_unitary = f.ambient == FlagAmbient::UnitaryGroup;
        const FlagData& u = here_unitary ? f : other;
        const FlagData& t = here_unitary ? other : f;
        CHECK(u.component == ComponentGroupKind::Trivial);
        CHECK(t.component == ComponentGroupKind::C2);
        CHECK(u.codegrees.back() == 4);
        CHECK(t.codegrees.back() == 2);
        CHECK(u.ring != t.ring);
      } else {
        CHECK(f.ambient_map.empty());
        CHECK(other.ring == f.ring);
        CHECK(other.component == f.component);
        CHECK(other.codegrees == f.codegrees);
        CHECK(f.component == ComponentGroupKind::C2);
      }

      // every chain the enumerator emits really is admissible
      CHECK_NOTHROW(flag_ring(f.chain, amb));
    }
  }
}

TEST_CASE("expected chains appear") {
  auto flags = enumerate_flags(3, FlagAmbient::TorusNormalizer);
  auto has = [&](const std::vector<DualLattice>& chain) {
    for (const FlagData& f : flags)
      if (f.chain == chain) return true;
    return false;
  };
  for (int n = 1; n <= 3; ++n) {
    CHECK(has({DualLattice(), make_edge_plus(1), make_lambda(1, 1, n)}));
    CHECK(has({make_edge_minus(1), make_lambda(1, n, 1)}));
  }
  CHECK(has({DualLattice(), make_lambda(1, 1, 1)}));
  CHECK(!has({make_lambda(1, 1, 1), make_lambda(2, 1, 1)}));  // torsion step

  std::string j = flags.front().to_json();
  CHECK(j.find("\"ring\"") != std::string::npos);
  CHECK(j.find("\"chain\"") != std::string::npos);
}
