// Go/no-go harness: ten independent checks over the whole library, one
// pass/fail line each. Everything here recomputes its expected answers
// from scratch (hand-rolled enumeration, elementary divisors, finite
// models, Haar sampling) rather than trusting the code under test.

#include "u2/blocks.hpp"
#include "u2/finite_model.hpp"
#include "u2/flags.hpp"
#include "u2/model.hpp"
#include "u2/unitary_oracle.hpp"

#include "generators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

using namespace u2;
using testgen::Built;
using testgen::MorphismFixture;

namespace {

struct Outcome {
  bool ok = true;
  long long checks = 0;
  std::string note;
};

void expect(Outcome& o, bool cond, const std::string& why) {
  ++o.checks;
  if (cond) return;
  if (o.ok) o.note = why;
  o.ok = false;
}

// ---------------------------------------------------------------------------
// 1. Every swap-invariant rank-2 sublattice of index <= 200, found by raw
//    Hermite-form enumeration, is one of the two closed-form families.

Outcome lattice_completeness() {
  Outcome o;
  std::set<DualLattice> brute;
  for (long long p = 1; p <= 200; ++p)
    for (long long r = 1; p * r <= 200; ++r)
      for (long long q = 0; q < r; ++q) {
        DualLattice L = canonicalize({Vec2{p, q}, Vec2{0, r}});
        if (L.rank() == 2 && L.is_invariant()) brute.insert(L);
      }

  std::set<DualLattice> closed;
  for (long long m = 1; 2 * m <= 200; ++m)
    for (long long n = 1; 2 * m * n <= 200; ++n) closed.insert(make_lambda(1, m, n));
  for (long long m = 1; m <= 200; ++m)
    for (long long n = 2 - (m % 2); m * n <= 200; n += 2) closed.insert(make_lambda(2, m, n));

  std::set<DualLattice> enumerated;
  for (const TaggedLattice& t : enumerate_invariant(200)) enumerated.insert(t.lattice);

  expect(o, brute == closed, "raw Hermite scan disagrees with the closed form");
  expect(o, brute == enumerated, "library enumeration disagrees with the raw scan");
  o.note = std::to_string(brute.size()) + " lattices";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Conjugacy class counts of the finite linear types, upstairs (in the
//    torus normalizer) and downstairs (after fusion in the whole group).

Outcome class_counts() {
  Outcome o;
  const CentralType types[] = {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4,
                               CentralType::D4};
  const int upstairs[] = {1, 1, 2, 3, 4};
  const int downstairs[] = {1, 1, 2, 2, 2};
  for (int i = 0; i < 5; ++i) {
    FullClassCount c = count_full_classes(types[i]);
    expect(o, c.preimage_classes == upstairs[i], "preimage count off for " + to_string(types[i]));
    expect(o, c.fused_classes == downstairs[i], "fused count off for " + to_string(types[i]));
  }
  return o;
}

// ---------------------------------------------------------------------------
// 3. The seven-piece partition is exact over the census at truncation 8,
//    and the validator notices six different kinds of injected damage.

Outcome partition_exactness() {
  Outcome o;
  PartitionReport clean = validate_partition(8);
  expect(o, clean.violations.empty(), "violations on the clean partition");
  long long total = 0;
  for (const auto& [id, count] : clean.block_counts) total += count;
  expect(o, total == static_cast<long long>(enumerate_subgroups(8).size()), "block counts miss the census");

  int detected = 0;
  auto fault = [&](const Int& M, PartitionHooks hooks) {
    if (!validate_partition(M, hooks).violations.empty()) ++detected;
  };
  {
    PartitionHooks h;  // Klein column routed to the dihedral piece
    h.block_of = [](const SubgroupClass& k) {
      if (const auto* f = std::get_if<Full>(&k))
        if (f->n == ExtInt::of(2)) return BlockId::N;
      return block_of(k);
    };
    fault(3, h);
  }
  {
    PartitionHooks h;  // whole group projected onto an exceptional class
    h.project = [](const SubgroupClass& k) {
      if (std::holds_alternative<Ambient>(k)) return so3_point(SO3Family::A5);
      return project(k);
    };
    fault(2, h);
  }
  {
    PartitionHooks h;  // Klein piece folded into the dihedral one downstairs
    h.so3_block_of = [](const SO3Class& c) {
      if (c.family == SO3Family::Dihedral && c.n == 2) return BlockId::N;
      return so3_block_of(c);
    };
    fault(2, h);
  }
  {
    PartitionHooks h;  // everything declared cotoral in the whole group
    h.is_cotoral = [](const SubgroupClass& k, const SubgroupClass& h2) {
      if (std::holds_alternative<Ambient>(h2)) return true;
      return is_cotoral(k, h2);
    };
    fault(2, h);
  }
  {
    PartitionHooks h;  // assignment that gives up on central products
    h.block_of = [](const SubgroupClass& k) -> BlockId {
      if (std::holds_alternative<CentralProduct>(k)) throw std::runtime_error("unhandled");
      return block_of(k);
    };
    fault(2, h);
  }
  {
    PartitionHooks h;  // non-invariant torals leaked into the top piece
    h.block_of = [](const SubgroupClass& k) {
      if (const auto* t = std::get_if<Toral>(&k))
        if (!t->dagger.is_invariant()) return BlockId::U2;
      return block_of(k);
    };
    fault(2, h);
  }
  expect(o, detected >= 5, "only " + std::to_string(detected) + " fault classes detected");
  o.note = std::to_string(total) + " classes, " + std::to_string(detected) + "/6 faults caught";
  return o;
}

// ---------------------------------------------------------------------------
// 4. Cofreeness laws. The independent oracle expresses the sublattice in
//    the coordinates of the superlattice (hand-rolled containment, no
//    library membership test) and reads torsion off elementary divisors.

bool oracle_coords(const DualLattice& B, const Vec2& v, std::vector<Int>& out) {
  const auto& rows = B.basis();
  if (B.rank() == 0) return v == Vec2{};
  if (B.rank() == 1) {
    const Vec2& b = rows[0];
    Int t = b.a != 0 ? v.a / b.a : v.b / b.b;
    if (Vec2{t * b.a, t * b.b} != v) return false;
    out = {t};
    return true;
  }
  // Hermite rows (p,q),(0,r)
  const Int &p = rows[0].a, &q = rows[0].b, &r = rows[1].b;
  if (v.a % p != 0) return false;
  Int alpha = v.a / p;
  if ((v.b - alpha * q) % r != 0) return false;
  out = {alpha, (v.b - alpha * q) / r};
  return true;
}

bool oracle_cofree(const DualLattice& A, const DualLattice& B) {
  std::vector<std::vector<Int>> coords;
  for (const Vec2& row : A.basis()) {
    std::vector<Int> c;
    if (!oracle_coords(B, row, c)) return false;
    coords.push_back(std::move(c));
  }
  if (A.rank() == 0) return true;  // quotient is all of B, free
  if (A.rank() == 1) {
    Int g = 0;
    for (const Int& x : coords[0]) g = gcd(g, x);
    return g == 1;
  }
  // both rank 2: torsion-free quotient forces equality
  Int det = coords[0][0] * coords[1][1] - coords[0][1] * coords[1][0];
  Int g = gcd(gcd(coords[0][0], coords[0][1]), gcd(coords[1][0], coords[1][1]));
  return g == 1 && (det == 1 || det == -1);
}

Outcome duality_laws() {
  Outcome o;
  std::vector<DualLattice> pool{DualLattice()};
  for (long long k = 1; k <= 12; ++k) {
    pool.push_back(make_edge_plus(k));
    pool.push_back(make_edge_minus(k));
  }
  for (const TaggedLattice& t : enumerate_invariant(100)) pool.push_back(t.lattice);

  long long mismatches = 0;
  std::vector<std::vector<size_t>> supers(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) {
    expect(o, is_cofree_in(pool[i], pool[i]), "not reflexive at " + to_string(pool[i]));
    for (size_t j = 0; j < pool.size(); ++j) {
      bool lib = is_cofree_in(pool[i], pool[j]);
      if (lib != oracle_cofree(pool[i], pool[j])) ++mismatches;
      if (lib && i != j) supers[i].push_back(j);
    }
  }
  expect(o, mismatches == 0, std::to_string(mismatches) + " divisor-oracle mismatches");

  std::mt19937_64 rng(4242);
  for (int t = 0; t < 1000; ++t) {
    size_t a = rng() % pool.size();
    if (supers[a].empty()) continue;
    size_t b = supers[a][rng() % supers[a].size()];
    if (supers[b].empty()) continue;
    size_t c = supers[b][rng() % supers[b].size()];
    expect(o, is_cofree_in(pool[a], pool[c]),
           "not transitive through " + to_string(pool[b]));
  }

  for (long long m = 1; m <= 20; ++m)
    for (long long n = 1; n <= 20; ++n) {
      expect(o, classify(make_lambda(1, m, n)) == LatticeClass{LatticeFamily::Lambda1, m, n},
             "misclassified diagonal lattice");
      if ((m - n) % 2 == 0)
        expect(o, classify(make_lambda(2, m, n)) == LatticeClass{LatticeFamily::Lambda2, m, n},
               "misclassified halved lattice");
    }
  o.note = std::to_string(pool.size()) + " lattices in the pool";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Exact normalizer orders in the finite models, against the predicted
//    class, for every legal extension with 2 <= n <= 6 and m <= 6.

Outcome normalizer_agreement() {
  Outcome o;
  int combos = 0;
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      std::vector<FullLambda> ls{FullLambda::Split, FullLambda::NonSplit};
      if ((m - n) % 2 == 0) ls.push_back(FullLambda::TypeTwo);
      for (FullLambda l : ls) {
        SubgroupClass K = full(ExtInt::of(m), ExtInt::of(n), l);
        model::ModelGroup G(model::model_level(K));
        std::vector<long long> H = model::realize(G, K);
        long long measured = model::normalizer_order_parallel(G, H);
        long long predicted = model::predicted_normalizer_order(G, K);
        expect(o, measured == predicted, "order mismatch at " + to_string(K));
        ++combos;
      }
    }
  o.note = std::to_string(combos) + " descriptors";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Unitary sampling finds no counterexample to the torus-intersection
//    law, and descriptor fusion is an equivalence relation whose central
//    product quotients have the predicted sizes.

Outcome fusion_laws() {
  Outcome o;
  numeric::FusionSampleReport rep = numeric::sample_fusion(10000, 42, 1e-9, 1e-6, true);
  expect(o, rep.violations == 0, std::to_string(rep.violations) + " sampling violations");

  std::vector<SubgroupClass> all = enumerate_subgroups(6);
  size_t n = all.size();
  std::vector<size_t> cls(n);
  for (size_t i = 0; i < n; ++i) {
    cls[i] = i;
    for (size_t j = 0; j < i; ++j)
      if (fuse(all[j], all[i])) {
        cls[i] = cls[j];
        break;
      }
  }
  long long bad = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!fuse(all[i], all[i])) ++bad;
    for (size_t j = i + 1; j < n; ++j) {
      bool f = fuse(all[i], all[j]);
      if (f != fuse(all[j], all[i]) || f != (cls[i] == cls[j])) ++bad;
    }
  }
  expect(o, bad == 0, std::to_string(bad) + " relation failures over the census");

  for (CentralType x : {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4, CentralType::D4}) {
    FullClassCount want = count_full_classes(x);
    std::map<std::string, std::vector<size_t>> buckets;  // same type and centre order
    for (size_t i = 0; i < n; ++i)
      if (const auto* cp = std::get_if<CentralProduct>(&all[i]))
        if (cp->x == x) buckets[to_string(cp->s)].push_back(i);
    for (const auto& [s, members] : buckets) {
      if (members.size() != static_cast<size_t>(want.preimage_classes)) continue;
      std::set<size_t> fused;
      for (size_t i : members) fused.insert(cls[i]);
      expect(o, fused.size() == static_cast<size_t>(want.fused_classes),
             "quotient size off for " + to_string(x) + " at s=" + s);
    }
  }
  o.note = std::to_string(n) + " classes, " + std::to_string(rep.kept) + " samples kept";
  return o;
}

// ---------------------------------------------------------------------------
// 7. One hundred random objects of each kind pass their validators, one
//    single-entry mutation per object is rejected, and kernel/cokernel
//    obey degreewise rank-nullity and zero composition.

Outcome model_validators() {
  Outcome o;
  Window w{-10, 2};

  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    Built b = testgen::random_object(rng, w, 1 + rng() % 2);
    testgen::scramble(b.obj, rng);
    expect(o, validate_type1(b.obj).verdict == Verdict::Pass, "vertical object rejected");

    Type1Object bad = b.obj;
    RatMat& m0 = bad.points[0].beta[static_cast<size_t>(w.idx(0))];
    m0.at(0, 0) = m0.at(0, 0) + 1;
    expect(o, validate_type1(bad).verdict == Verdict::Fail, "vertical mutation accepted");
  }

  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    Window hw{-4 - 2 * static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    Type0Object x;
    x.w = hw;
    x.FH.w = hw;
    x.FH.dims.assign(static_cast<size_t>(hw.size()), 0);
    for (auto& d : x.FH.dims) d = rng() % 3;
    x.FH.dims[static_cast<size_t>(rng() % x.FH.dims.size())] += 1;
    Type0Point a;  // carries a faithful copy of the global sections
    a.label = "a";
    a.F = x.FH;
    for (int i = 0; i < hw.size(); ++i) a.spread.push_back(RatMat::identity(x.FH.dims[static_cast<size_t>(i)]));
    Type0Point b;  // random extra stalk that spreads nothing
    b.label = "b";
    b.F.w = hw;
    b.F.dims.assign(static_cast<size_t>(hw.size()), 0);
    for (auto& d : b.F.dims) d = rng() % 2;
    for (int i = 0; i < hw.size(); ++i)
      b.spread.push_back(RatMat(b.F.dims[static_cast<size_t>(i)], x.FH.dims[static_cast<size_t>(i)]));
    x.points.push_back(std::move(a));
    x.points.push_back(std::move(b));
    expect(o, validate_type0(x).verdict == Verdict::Pass, "horizontal object rejected");

    for (int i = 0; i < hw.size(); ++i)
      if (x.FH.dims[static_cast<size_t>(i)] > 0) {
        x.points[0].spread[static_cast<size_t>(i)].at(0, 0) = 0;
        break;
      }
    expect(o, validate_type0(x).verdict == Verdict::Fail, "horizontal mutation accepted");
  }

  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(7000 + seed);
    size_t nl = 1 + rng() % 2;
    std::vector<std::string> labels;
    for (size_t i = 0; i < nl; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<Bar> tailbars;
    size_t nfree = 1 + rng() % 2;
    for (size_t i = 0; i < nfree; ++i) {
      int top = w.lo + static_cast<int>(rng() % static_cast<unsigned long long>(w.size()));
      tailbars.push_back({top, testgen::free_len(w, top), true});
    }
    for (const Bar& bar : testgen::random_torsion(rng, w, 3)) tailbars.push_back(bar);
    CModule phi_t = module_from_bars(w, tailbars);
    ParityPair ft = inverted_dims(phi_t);
    GradedVS phi_g;
    phi_g.w = w;
    phi_g.dims.assign(static_cast<size_t>(w.size()), 0);
    phi_g.dims[static_cast<size_t>(w.idx(0))] = ft.even;
    phi_g.dims[static_cast<size_t>(w.idx(1))] = ft.odd;
    std::vector<GradedVS> phi_z;
    std::vector<std::vector<Bar>> torsion;
    for (size_t i = 0; i < nl; ++i) {
      GradedVS v;
      v.w = w;
      v.dims.assign(static_cast<size_t>(w.size()), 0);
      for (auto& d : v.dims) d = rng() % 2;
      phi_z.push_back(std::move(v));
      torsion.push_back(testgen::random_torsion(rng, w, 3));
    }
    phi_z.push_back(phi_g);
    Standard2DObject x = make_standard2d(w, labels, phi_z, phi_t, phi_g, torsion);
    expect(o, validate_standard2d(x).verdict == Verdict::Pass, "two-direction object rejected");

    x.g_corner.odd += 1;
    expect(o, validate_standard2d(x).verdict == Verdict::Fail, "corner mutation accepted");
  }

  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(9000 + seed);
    Window zw{-8, 0};
    std::vector<Bar> bars;
    size_t nb = 1 + rng() % 2;
    for (size_t i = 0; i < nb; ++i) {
      int top = -2 - 2 * static_cast<int>(rng() % 2);
      int maxlen = (top - zw.lo) / 2;  // the bar's death must stay inside the window
      bars.push_back({top, 1 + static_cast<int>(rng() % static_cast<unsigned long long>(maxlen)), false});
    }
    CModule c = module_from_bars(zw, bars);
    PolyModule m;
    m.w = zw;
    m.dims = c.dims;
    m.ops = {c.c};
    SubgroupClass K = central_product(CentralType::A5, ExtInt::of(1 + seed % 6), 0);
    bool built = true;
    try {
      zero_dim_object(K, m);
    } catch (const std::invalid_argument&) {
      built = false;
    }
    expect(o, built, "zero-dimensional object rejected");

    PolyModule badm = m;
    badm.dims[static_cast<size_t>(zw.idx(0))] += 1;
    bool rejected = false;
    try {
      zero_dim_object(K, badm);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(o, rejected, "zero-dimensional mutation accepted");
  }

  for (unsigned seed = 0; seed < 100; ++seed) {
    MorphismFixture fx = testgen::random_morphism(seed);
    expect(o, morphism_error(fx.f, fx.x, fx.y).empty(), "random morphism illegal");

    Type1Sub k = kernel(fx.f, fx.x, fx.y);
    expect(o, validate_type1(k.object).verdict == Verdict::Pass, "kernel invalid");
    expect(o, morphism_error(k.embed, k.object, fx.x).empty(), "kernel embedding illegal");

    Type1Quot q = cokernel(fx.f, fx.x, fx.y);
    expect(o, validate_type1(q.object).verdict != Verdict::Fail, "cokernel invalid");
    expect(o, morphism_error(q.project, fx.y, q.object).empty(), "cokernel projection illegal");

    for (size_t p = 0; p < fx.x.points.size(); ++p)
      for (int i = 0; i < fx.x.w.size(); ++i) {
        size_t si = static_cast<size_t>(i);
        long long rk = testgen::oracle_rank(fx.f.fN[p][si]);
        expect(o, k.object.points[p].N.dims[si] + rk == fx.x.points[p].N.dims[si], "kernel rank-nullity");
        expect(o, q.object.points[p].N.dims[si] == fx.y.points[p].N.dims[si] - rk, "cokernel rank-nullity");
        expect(o, is_zero(q.project.fN[p][si] * fx.f.fN[p][si]), "composite not zero");
      }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 8. Restriction along the class covering: the three-sheet pullback on
//    the Klein block, the identity on the octahedral block.

Outcome restriction_laws() {
  Outcome o;
  Window w{-8, 0};

  Type1Object tri;  // one point with the two-dimensional symmetric-group action
  tri.w = w;
  tri.V.w = w;
  tri.V.dims.assign(static_cast<size_t>(w.size()), 0);
  tri.V.group = ComponentGroupKind::Sigma3;
  std::vector<RatMat> empty(static_cast<size_t>(w.size()), RatMat(0, 0));
  tri.V.action = {empty, empty};
  Type1Point p;
  p.label = "c1";
  p.wk = ComponentGroupKind::Sigma3;
  p.N = module_from_bars(w, {{0, 1, false}, {0, 1, false}});
  auto fam = [&](const RatMat& g) {
    std::vector<RatMat> f;
    for (long long d : p.N.dims) f.push_back(d == 2 ? g : RatMat::identity(d));
    return f;
  };
  p.gens_on_N = {fam(testgen::M({{0, -1}, {1, -1}})), fam(testgen::M({{0, 1}, {1, 0}}))};
  p.gens_on_V = {empty, empty};
  for (int i = 0; i < w.size(); ++i) p.beta.push_back(RatMat(0, p.N.dims[static_cast<size_t>(i)]));
  tri.points.push_back(std::move(p));
  expect(o, validate_type1(tri).verdict == Verdict::Pass, "covering input invalid");

  Type1Object r3 = restrict_easy_block(tri, CentralType::D4);
  expect(o, r3.points.size() == 3, "expected three sheets");
  for (size_t i = 0; i < r3.points.size(); ++i) {
    expect(o, r3.points[i].N == tri.points[0].N, "sheet module differs");
    expect(o, r3.points[i].wk == ComponentGroupKind::Trivial, "sheet keeps symmetry");
    expect(o, r3.points[i].label == "c1/" + std::to_string(i), "sheet label off");
  }
  expect(o, validate_type1(r3).verdict == Verdict::Pass, "three-sheet output invalid");

  Type1Object two;  // two plain torsion points
  two.w = w;
  two.V.w = w;
  two.V.dims.assign(static_cast<size_t>(w.size()), 0);
  for (const char* l : {"c0", "c1"}) {
    Type1Point q;
    q.label = l;
    q.N = module_from_bars(w, {{0, 2, false}});
    for (int i = 0; i < w.size(); ++i) q.beta.push_back(RatMat(0, q.N.dims[static_cast<size_t>(i)]));
    two.points.push_back(std::move(q));
  }
  Type1Object r2 = restrict_easy_block(two, CentralType::Sigma4);
  expect(o, r2.points.size() == two.points.size(), "octahedral restriction resized");
  for (size_t i = 0; i < r2.points.size(); ++i) {
    expect(o, r2.points[i].N == two.points[i].N, "octahedral module differs");
    expect(o, r2.points[i].beta == two.points[i].beta, "octahedral structure map differs");
    expect(o, r2.points[i].label == two.points[i].label + "/0", "octahedral label off");
  }
  expect(o, validate_type1(r2).verdict == Verdict::Pass, "octahedral output invalid");
  return o;
}

// ---------------------------------------------------------------------------
// 9. The block indicators in the ring of functions on finite-Weyl classes
//    at truncation 8 are orthogonal idempotents summing to one, supported
//    exactly on their blocks.

Outcome burnside_idempotents() {
  Outcome o;
  BurnsideFunctions B = burnside_functions(8);
  const std::vector<BlockId>& blocks = all_blocks();
  expect(o, B.idempotents.size() == blocks.size(), "one idempotent per block");

  for (size_t j = 0; j < blocks.size(); ++j)
    for (size_t i = 0; i < B.classes.size(); ++i) {
      Rat want = block_of(B.classes[i]) == blocks[j] ? 1 : 0;
      expect(o, B.idempotents[j][i] == want, "support off at " + to_string(B.classes[i]));
    }

  std::vector<Rat> sum = B.zero();
  for (size_t j = 0; j < blocks.size(); ++j) {
    expect(o, B.multiply(B.idempotents[j], B.idempotents[j]) == B.idempotents[j], "not idempotent");
    for (size_t k = j + 1; k < blocks.size(); ++k)
      expect(o, B.multiply(B.idempotents[j], B.idempotents[k]) == B.zero(), "not orthogonal");
    sum = B.add(sum, B.idempotents[j]);
  }
  expect(o, sum == B.one(), "does not sum to one");
  o.note = std::to_string(B.classes.size()) + " classes";
  return o;
}

// ---------------------------------------------------------------------------
// 10. Flag rings: central chains flip polynomial ring and component group
//     between the two ambients, with the degree-doubling substitution;
//     everything else is ambient-independent.

Outcome flag_ambient_laws() {
  Outcome o;
  int central = 0, plain = 0;
  for (int M = 1; M <= 3; ++M) {
    std::vector<FlagData> tn = enumerate_flags(M, FlagAmbient::TorusNormalizer);
    std::vector<FlagData> u2 = enumerate_flags(M, FlagAmbient::UnitaryGroup);
    expect(o, tn.size() == u2.size(), "flag counts differ between ambients");
    for (size_t i = 0; i < tn.size() && i < u2.size(); ++i) {
      const FlagData &a = tn[i], &b = u2[i];
      expect(o, a.chain == b.chain, "chain order differs between ambients");
      expect(o, a.central == b.central, "centrality differs between ambients");
      if (a.central) {
        ++central;
        std::string flipped = a.ring;
        size_t at = flipped.rfind("c'");
        expect(o, at != std::string::npos, "central ring without a second generator");
        if (at != std::string::npos) flipped.replace(at, 2, "d'");
        expect(o, b.ring == flipped, "ring does not flip: " + a.ring + " vs " + b.ring);
        expect(o, a.component == ComponentGroupKind::C2, "upstairs component not C2");
        expect(o, b.component == ComponentGroupKind::Trivial, "downstairs component not trivial");
        expect(o, !a.codegrees.empty() && a.codegrees.back() == 2, "upstairs codegree not 2");
        expect(o, !b.codegrees.empty() && b.codegrees.back() == 4, "downstairs codegree not 4");
        expect(o,
               std::equal(a.codegrees.begin(), a.codegrees.end() - 1, b.codegrees.begin(),
                          b.codegrees.end() - 1),
               "leading codegrees differ");
        expect(o, a.ambient_map == "d' -> (c')^2" && b.ambient_map == a.ambient_map, "substitution missing");
      } else {
        ++plain;
        expect(o, a.ring == b.ring && a.codegrees == b.codegrees && a.component == b.component,
               "non-central flag feels the ambient");
        expect(o, a.ambient_map.empty() && b.ambient_map.empty(), "spurious substitution");
      }
    }
  }
  o.note = std::to_string(central) + " central / " + std::to_string(plain) + " plain flags";
  return o;
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Outcome (*fn)();
  };
  const Row rows[] = {
      {"invariant sublattice census matches the closed form", lattice_completeness},
      {"finite linear class counts upstairs and downstairs", class_counts},
      {"block partition is exact and injected faults are caught", partition_exactness},
      {"cofreeness agrees with the elementary-divisor oracle", duality_laws},
      {"finite-model normalizer orders match the predictions", normalizer_agreement},
      {"unitary sampling and descriptor fusion agree", fusion_laws},
      {"validators accept canonical objects, reject mutations", model_validators},
      {"restriction pulls back along the class covering", restriction_laws},
      {"block idempotents form a partition of unity", burnside_idempotents},
      {"flag rings flip exactly on central chains", flag_ambient_laws},
  };

  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 10; ++i) {
    Outcome o = rows[i].fn();
    if (!o.ok) ++failed;
    std::string tail = o.note.empty() ? "" : " (" + o.note + ")";
    std::printf("%2d/10 %-58s %s%s\n", i + 1, rows[i].name, o.ok ? "pass" : "FAIL", tail.c_str());
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/10 criteria passed in %.1fs\n", 10 - failed, secs);
  return failed == 0 ? 0 : 1;
}
