#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u2/weyl.hpp"

#include <map>
#include <vector>

using namespace u2;

namespace {

SubgroupClass F(int m, int n, FullLambda l) { return full(ExtInt::of(m), ExtInt::of(n), l); }
SubgroupClass Fmi(int m, FullLambda l) { return full(ExtInt::of(m), ExtInt::inf(), l); }
SubgroupClass Fin(int n) { return full(ExtInt::inf(), ExtInt::of(n), FullLambda::Split); }
SubgroupClass CP(CentralType x, int s, int v = 0) { return central_product(x, ExtInt::of(s), v); }
SubgroupClass CPi(CentralType x, int v = 0) { return central_product(x, ExtInt::inf(), v); }

const WeylData kFullTorus{2, WeylFlavor::U2, ComponentGroupKind::Trivial, WeylTwist::None};

} // namespace

TEST_CASE("ring strings and component orders") {
  CHECK(ring_string({0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None}) == "Q");
  CHECK(ring_string({1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None}) == "Q[c]");
  CHECK(ring_string({2, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::SwapCC}) ==
        "Q[c,c']");
  CHECK(ring_string({1, WeylFlavor::SO3, ComponentGroupKind::Trivial, WeylTwist::None}) ==
        "Q[d']");
  CHECK(ring_string(kFullTorus) == "Q[c,d']");

  CHECK(component_order(ComponentGroupKind::Trivial) == 1);
  CHECK(component_order(ComponentGroupKind::C2) == 2);
  CHECK(component_order(ComponentGroupKind::C3) == 3);
  CHECK(component_order(ComponentGroupKind::C2xC2) == 4);
  CHECK(component_order(ComponentGroupKind::Sigma3) == 6);
}

TEST_CASE("weyl data of toral classes") {
  // central subgroups keep the whole ambient group as quotient
  CHECK(weyl(toral(make_edge_minus(1))) ==
        WeylData{1, WeylFlavor::SO3, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(toral(make_lambda(1, 2, 1))) == kFullTorus);
  CHECK(weyl(toral(make_lambda(2, 3, 1))) == kFullTorus);
  CHECK(weyl(toral(make_lambda(2, 1, 1))) == kFullTorus); // trivial subgroup

  // the maximal torus: finite quotient of order 2
  CHECK(weyl(toral(DualLattice{})) ==
        WeylData{0, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});

  // invariant but not central: C2 components, twist by rank
  CHECK(weyl(toral(make_edge_plus(3))) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
  CHECK(weyl(toral(make_edge_minus(4))) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::NegateC});
  CHECK(weyl(toral(make_lambda(1, 2, 3))) ==
        WeylData{2, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::SwapCC});
  CHECK(weyl(toral(make_lambda(2, 5, 3))) ==
        WeylData{2, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::SwapCC});

  // off the swap axis: connected quotient
  CHECK(weyl(toral(canonicalize({Vec2{1, 0}}))) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(toral(canonicalize({Vec2{1, 0}, Vec2{0, 5}}))) ==
        WeylData{2, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
}

TEST_CASE("weyl data of full classes") {
  for (int m : {1, 2, 5}) {
    CHECK(weyl(F(m, 3, FullLambda::Split)) ==
          WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
    CHECK(weyl(F(m, 2, FullLambda::NonSplit)) ==
          WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
  }
  CHECK(weyl(F(3, 3, FullLambda::TypeTwo)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(F(2, 4, FullLambda::TypeTwo)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});

  CHECK(weyl(Fmi(4, FullLambda::Split)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(Fmi(4, FullLambda::NonSplit)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(Fin(3)) == WeylData{0, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
  CHECK(weyl(Fin(7)) == WeylData{0, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
  CHECK(weyl(full(ExtInt::inf(), ExtInt::inf(), FullLambda::Split)) ==
        WeylData{0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});

  // boundary spellings that fold into other tags first
  CHECK(weyl(Fin(2)) ==
        WeylData{0, WeylFlavor::Torus, ComponentGroupKind::Sigma3, WeylTwist::None});
  CHECK(weyl(Fin(1)) == weyl(toral(make_edge_minus(2))));
  CHECK(weyl(F(3, 1, FullLambda::Split)) ==
        WeylData{2, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::SwapCC});
  CHECK(weyl(F(3, 1, FullLambda::TypeTwo)) ==
        WeylData{2, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
}

TEST_CASE("weyl data of central products and ambient") {
  CHECK(weyl(CP(CentralType::SU2, 2)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(CPi(CentralType::SU2)) ==
        WeylData{0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});

  CHECK(weyl(CP(CentralType::A5, 3)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(CP(CentralType::Sigma4, 1, 1)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(CP(CentralType::A4, 2)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});
  CHECK(weyl(CP(CentralType::A4, 2, 1)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
  CHECK(weyl(CP(CentralType::D4, 5)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::Sigma3, WeylTwist::None});
  CHECK(weyl(CP(CentralType::D4, 5, 2)) ==
        WeylData{1, WeylFlavor::Torus, ComponentGroupKind::C2, WeylTwist::None});

  // at infinite centre the components match the rotation-group picture
  for (CentralType x : {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4,
                        CentralType::D4})
    CHECK(weyl(CPi(x)).component == so3_weyl_component(x));

  CHECK(weyl(ambient()) ==
        WeylData{0, WeylFlavor::Torus, ComponentGroupKind::Trivial, WeylTwist::None});
}

TEST_CASE("normalizer classes") {
  const SubgroupClass diag_normalizer = full(ExtInt::inf(), ExtInt::inf(), FullLambda::Split);

  CHECK(normalizer(toral(make_edge_minus(1))) == ambient());
  CHECK(normalizer(toral(make_lambda(1, 2, 1))) == ambient());
  CHECK(normalizer(toral(DualLattice{})) == diag_normalizer);
  CHECK(normalizer(toral(make_edge_plus(2))) == diag_normalizer);
  CHECK(normalizer(toral(make_lambda(1, 2, 3))) == diag_normalizer);
  CHECK(normalizer(toral(canonicalize({Vec2{1, 0}}))) == toral(DualLattice{}));
  CHECK(normalizer(toral(canonicalize({Vec2{1, 2}, Vec2{0, 4}}))) == toral(DualLattice{}));

  CHECK(normalizer(F(2, 3, FullLambda::Split)) == Fin(6));
  CHECK(normalizer(F(3, 3, FullLambda::TypeTwo)) == Fin(3));
  CHECK(normalizer(F(2, 2, FullLambda::NonSplit)) == Fin(4));
  CHECK(normalizer(Fmi(3, FullLambda::Split)) == diag_normalizer);
  CHECK(normalizer(Fmi(3, FullLambda::NonSplit)) == diag_normalizer);
  CHECK(normalizer(Fin(3)) == Fin(6));
  CHECK(normalizer(diag_normalizer) == diag_normalizer);

  // abelian column: the split forms sit on a diagonal torus, the askew
  // form's normalizer is a maximal torus
  CHECK(normalizer(F(3, 1, FullLambda::Split)) == diag_normalizer);
  CHECK(normalizer(F(4, 1, FullLambda::NonSplit)) == diag_normalizer);
  CHECK(normalizer(F(3, 1, FullLambda::TypeTwo)) == toral(DualLattice{}));

  CHECK(normalizer(CP(CentralType::SU2, 4)) == ambient());
  CHECK(normalizer(CP(CentralType::A5, 7)) == CPi(CentralType::A5));
  CHECK(normalizer(CP(CentralType::Sigma4, 2)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(CP(CentralType::Sigma4, 2, 1)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(CP(CentralType::A4, 2)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(CP(CentralType::A4, 2, 1)) == CPi(CentralType::A4));
  CHECK(normalizer(CP(CentralType::D4, 3)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(CP(CentralType::D4, 3, 1)) == Fin(4));
  CHECK(normalizer(CPi(CentralType::D4)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(Fin(2)) == CPi(CentralType::Sigma4));
  CHECK(normalizer(ambient()) == ambient());

  // normalizers are valid descriptors and contain their argument cotorally
  // only when the quotient is connected; validity always holds
  for (const SubgroupClass& k : enumerate_subgroups(4)) CHECK(is_valid(normalizer(k)));
}

TEST_CASE("class counts over each projected type") {
  auto counts = [](CentralType x) {
    FullClassCount c = count_full_classes(x);
    return std::pair<int, int>{c.preimage_classes, c.fused_classes};
  };
  CHECK(counts(CentralType::SU2) == std::pair<int, int>{1, 1});
  CHECK(counts(CentralType::A5) == std::pair<int, int>{1, 1});
  CHECK(counts(CentralType::Sigma4) == std::pair<int, int>{2, 2});
  CHECK(counts(CentralType::A4) == std::pair<int, int>{3, 2});
  CHECK(counts(CentralType::D4) == std::pair<int, int>{4, 2});

  for (CentralType x : {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4,
                        CentralType::D4})
    CHECK(count_full_classes(x).preimage_classes == abelianization_order(x));
}

TEST_CASE("fusion is an equivalence matching the class counts") {
  std::vector<SubgroupClass> all = enumerate_subgroups(4);

  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(fuse(all[i], all[i]));
    for (size_t j = i + 1; j < all.size(); ++j)
      CHECK(fuse(all[i], all[j]) == fuse(all[j], all[i]));
  }

  // transitivity across every fused pair
  std::vector<std::pair<size_t, size_t>> fused;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (fuse(all[i], all[j])) fused.emplace_back(i, j);
  for (const auto& [i, j] : fused)
    for (const auto& [k, l] : fused) {
      if (j == k) CHECK(fuse(all[i], all[l]));
      if (j == l) CHECK(fuse(all[i], all[k]));
    }
}

TEST_CASE("fusion pinned pairs") {
  // swapped toral annihilators name conjugate subgroups
  CHECK(fuse(toral(canonicalize({Vec2{1, 0}})), toral(canonicalize({Vec2{0, 1}}))));
  CHECK(fuse(toral(canonicalize({Vec2{1, 2}, Vec2{0, 5}})),
             toral(canonicalize({Vec2{2, 1}, Vec2{5, 0}}))));
  CHECK_FALSE(fuse(toral(canonicalize({Vec2{1, 0}})), toral(canonicalize({Vec2{1, 3}}))));

  CHECK_FALSE(fuse(F(3, 4, FullLambda::Split), F(3, 4, FullLambda::NonSplit)));
  CHECK_FALSE(fuse(F(3, 4, FullLambda::Split), F(3, 2, FullLambda::Split)));
  CHECK(fuse(F(3, 4, FullLambda::Split), F(3, 4, FullLambda::Split)));

  // distinct tags stay distinct at finite parameters
  CHECK_FALSE(fuse(F(5, 2, FullLambda::Split), CP(CentralType::D4, 5)));
  // but the shared boundary class is recognized through its common form
  CHECK(fuse(full(ExtInt::inf(), ExtInt::of(2), FullLambda::Split), CPi(CentralType::D4)));
  CHECK(fuse(F(2, 1, FullLambda::Split), toral(make_lambda(1, 2, 2))));
  CHECK(fuse(F(3, 1, FullLambda::NonSplit), toral(make_lambda(1, 3, 2))));
  CHECK(fuse(CPi(CentralType::SU2), ambient()));

  // central product variants collapse along the Weyl orbits of characters
  CHECK(fuse(CP(CentralType::D4, 3, 1), CP(CentralType::D4, 3, 2)));
  CHECK(fuse(CP(CentralType::D4, 3, 2), CP(CentralType::D4, 3, 3)));
  CHECK_FALSE(fuse(CP(CentralType::D4, 3, 0), CP(CentralType::D4, 3, 1)));
  CHECK(fuse(CP(CentralType::A4, 2, 1), CP(CentralType::A4, 2, 2)));
  CHECK_FALSE(fuse(CP(CentralType::A4, 2, 0), CP(CentralType::A4, 2, 1)));
  CHECK_FALSE(fuse(CP(CentralType::Sigma4, 2, 0), CP(CentralType::Sigma4, 2, 1)));
  CHECK_FALSE(fuse(CP(CentralType::A4, 2, 1), CP(CentralType::A4, 3, 1)));
  CHECK_FALSE(fuse(CP(CentralType::A4, 2, 1), CP(CentralType::D4, 2, 1)));

  // per-type: variants at a fixed finite centre fall into exactly
  // fused_classes buckets
  for (CentralType x : {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4,
                        CentralType::D4}) {
    int a = abelianization_order(x);
    std::vector<SubgroupClass> reps;
    for (int v = 0; v < a; ++v) {
      SubgroupClass c = CP(x, 6, v);
      bool seen = false;
      for (const SubgroupClass& r : reps) seen = seen || fuse(r, c);
      if (!seen) reps.push_back(c);
    }
    CHECK(int(reps.size()) == count_full_classes(x).fused_classes);
  }
}
