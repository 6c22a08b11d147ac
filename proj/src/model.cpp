#include "u2/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace u2 {

namespace {

int parity_of(int d) { return ((d % 2) + 2) % 2; }

std::vector<int> parity_indices(const Window& w, int parity) {
  std::vector<int> out;
  for (int d = w.lo; d <= w.hi; ++d)
    if (parity_of(d) == parity) out.push_back(w.idx(d));
  return out;
}

void check_window(const Window& w) {
  if (w.size() <= 0) throw std::invalid_argument("model: empty degree window");
}

void check_dims(const Window& w, const std::vector<long long>& dims, const char* what) {
  if (static_cast<int>(dims.size()) != w.size()) throw std::invalid_argument(std::string(what) + ": dims length does not match window");
  for (long long d : dims)
    if (d < 0) throw std::invalid_argument(std::string(what) + ": negative dimension");
}

// Degree-lowering operator family: mats[i] maps degree lo+i to lo+i-2,
// with zero rows below the window.
void check_lowering(const Window& w, const std::vector<long long>& dims, const std::vector<RatMat>& mats, const char* what) {
  if (static_cast<int>(mats.size()) != w.size()) throw std::invalid_argument(std::string(what) + ": operator family length does not match window");
  for (int i = 0; i < w.size(); ++i) {
    long long want_rows = i >= 2 ? dims[static_cast<size_t>(i - 2)] : 0;
    if (mats[static_cast<size_t>(i)].rows != want_rows || mats[static_cast<size_t>(i)].cols != dims[static_cast<size_t>(i)])
      throw std::invalid_argument(std::string(what) + ": operator shape mismatch at degree " + std::to_string(w.lo + i));
  }
}

void check_degreewise(const Window& w, const std::vector<long long>& rows, const std::vector<long long>& cols,
                      const std::vector<RatMat>& mats, const char* what) {
  if (static_cast<int>(mats.size()) != w.size()) throw std::invalid_argument(std::string(what) + ": family length does not match window");
  for (int i = 0; i < w.size(); ++i)
    if (mats[static_cast<size_t>(i)].rows != rows[static_cast<size_t>(i)] || mats[static_cast<size_t>(i)].cols != cols[static_cast<size_t>(i)])
      throw std::invalid_argument(std::string(what) + ": shape mismatch at degree " + std::to_string(w.lo + i));
}

void check_vs(const GradedVS& v, const Window& w, const char* what) {
  if (!(v.w == w)) throw std::invalid_argument(std::string(what) + ": window mismatch");
  check_dims(w, v.dims, what);
  if (v.action.size() != static_cast<size_t>(group_generator_count(v.group)))
    throw std::invalid_argument(std::string(what) + ": generator count does not match group");
  for (const auto& g : v.action) check_degreewise(w, v.dims, v.dims, g, what);
}

void check_cmodule(const CModule& m, const Window& w, const char* what) {
  if (!(m.w == w)) throw std::invalid_argument(std::string(what) + ": window mismatch");
  check_dims(w, m.dims, what);
  check_lowering(w, m.dims, m.c, what);
}

void finalize(ValidationReport& r) {
  r.verdict = !r.failures.empty() ? Verdict::Fail : (!r.caveats.empty() ? Verdict::Inconclusive : Verdict::Pass);
}

}  // namespace

int group_generator_count(ComponentGroupKind g) {
  switch (g) {
    case ComponentGroupKind::Trivial: return 0;
    case ComponentGroupKind::C2:
    case ComponentGroupKind::C3: return 1;
    case ComponentGroupKind::C2xC2:
    case ComponentGroupKind::Sigma3: return 2;
  }
  throw std::logic_error("group_generator_count: unhandled kind");
}

namespace {

// Words in the generators that must evaluate to the identity.
std::vector<std::vector<int>> relation_words(ComponentGroupKind g) {
  switch (g) {
    case ComponentGroupKind::Trivial: return {};
    case ComponentGroupKind::C2: return {{0, 0}};
    case ComponentGroupKind::C3: return {{0, 0, 0}};
    case ComponentGroupKind::C2xC2: return {{0, 0}, {1, 1}, {0, 1, 0, 1}};
    case ComponentGroupKind::Sigma3: return {{0, 0, 0}, {1, 1}, {1, 0, 1, 0}};
  }
  throw std::logic_error("relation_words: unhandled kind");
}

}  // namespace

std::string group_relation_error(ComponentGroupKind g, const std::vector<std::vector<RatMat>>& gens,
                                 const std::vector<long long>& dims) {
  size_t want = static_cast<size_t>(group_generator_count(g));
  if (gens.size() != want) return "expected " + std::to_string(want) + " generator(s), got " + std::to_string(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    if (gens[gi].size() != dims.size()) return "generator " + std::to_string(gi) + ": family length does not match window";
    for (size_t i = 0; i < dims.size(); ++i)
      if (gens[gi][i].rows != dims[i] || gens[gi][i].cols != dims[i])
        return "generator " + std::to_string(gi) + ": not square of the degree dimension";
  }
  for (const auto& word : relation_words(g)) {
    for (size_t i = 0; i < dims.size(); ++i) {
      RatMat m = RatMat::identity(dims[i]);
      for (int gi : word) m = m * gens[static_cast<size_t>(gi)][i];
      if (!(m == RatMat::identity(dims[i]))) {
        std::string w;
        for (int gi : word) w += static_cast<char>('a' + gi);
        return "relation " + w + " = 1 fails";
      }
    }
  }
  return "";
}

GradedVS vs_point(const Window& w, int degree, long long dim) {
  check_window(w);
  if (!w.contains(degree)) throw std::invalid_argument("vs_point: degree outside window");
  GradedVS v;
  v.w = w;
  v.dims.assign(static_cast<size_t>(w.size()), 0);
  v.dims[static_cast<size_t>(w.idx(degree))] = dim;
  return v;
}

std::vector<Bar> sorted_bars(std::vector<Bar> bars) {
  std::sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    return std::tuple(!x.free_, x.top, x.len) < std::tuple(!y.free_, y.top, y.len);
  });
  return bars;
}

std::vector<Bar> CModule::decompose() const {
  check_window(w);
  check_cmodule(*this, w, "CModule");
  std::vector<Bar> bars;
  for (int parity = 0; parity < 2; ++parity) {
    int d_bot = parity_of(w.lo) == parity ? w.lo : w.lo + 1;
    if (d_bot > w.hi) continue;
    int n = (w.hi - d_bot) / 2 + 1;  // positions d_bot, d_bot+2, ...
    // R[a][b] = rank of the composite from degree d_bot+2a down to d_bot+2b.
    std::vector<std::vector<long long>> R(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int a = 0; a < n; ++a) {
      int da = d_bot + 2 * a;
      RatMat cur = RatMat::identity(dims[static_cast<size_t>(w.idx(da))]);
      R[static_cast<size_t>(a)][static_cast<size_t>(a)] = cur.rows;
      for (int b = a - 1; b >= 0; --b) {
        int db = d_bot + 2 * b;
        cur = c[static_cast<size_t>(w.idx(db) + 2)] * cur;
        R[static_cast<size_t>(a)][static_cast<size_t>(b)] = rank(cur);
      }
    }
    auto rr = [&](int a, int b) -> long long { return (a >= 0 && a < n && b >= 0 && b <= a) ? R[static_cast<size_t>(a)][static_cast<size_t>(b)] : 0; };
    for (int a = 0; a < n; ++a) {
      int da = d_bot + 2 * a;
      long long fmu = rr(a, 0) - rr(a + 1, 0);
      for (long long t = 0; t < fmu; ++t) bars.push_back({da, a + 1, true});
      for (int b = a; b >= 1; --b) {
        long long mu = rr(a, b) - rr(a + 1, b) - rr(a, b - 1) + rr(a + 1, b - 1);
        for (long long t = 0; t < mu; ++t) bars.push_back({da, a - b + 1, false});
      }
    }
  }
  // Interval multiplicities must reassemble the degreewise dimensions.
  std::vector<long long> got(static_cast<size_t>(w.size()), 0);
  for (const Bar& b : bars)
    for (int j = 0; j < b.len; ++j) got[static_cast<size_t>(w.idx(b.top - 2 * j))] += 1;
  if (got != dims) throw std::logic_error("CModule::decompose: bars do not reassemble the module");
  return sorted_bars(std::move(bars));
}

CModule module_from_bars(const Window& w, const std::vector<Bar>& bars) {
  check_window(w);
  for (const Bar& b : bars) {
    if (!w.contains(b.top)) throw std::invalid_argument("module_from_bars: bar top outside window");
    if (!b.free_) {
      if (b.len < 1) throw std::invalid_argument("module_from_bars: empty bar");
      if (b.top - 2 * (b.len - 1) < w.lo + 2)
        throw std::invalid_argument("module_from_bars: bar death not visible in window; use a free bar or widen the window");
    }
  }
  // Degree-d basis: pairs (bar, c-power), bars in input order.
  auto covers = [&](const Bar& b, int d) {
    if (d > b.top || parity_of(d) != parity_of(b.top)) return false;
    return b.free_ ? d >= w.lo : d >= b.top - 2 * (b.len - 1);
  };
  CModule m;
  m.w = w;
  m.dims.assign(static_cast<size_t>(w.size()), 0);
  std::vector<std::map<std::pair<size_t, int>, long long>> pos(static_cast<size_t>(w.size()));
  for (int d = w.lo; d <= w.hi; ++d) {
    size_t i = static_cast<size_t>(w.idx(d));
    for (size_t bi = 0; bi < bars.size(); ++bi)
      if (covers(bars[bi], d)) pos[i][{bi, (bars[bi].top - d) / 2}] = m.dims[i]++;
  }
  m.c.resize(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) {
    size_t si = static_cast<size_t>(i);
    m.c[si] = RatMat(i >= 2 ? m.dims[si - 2] : 0, m.dims[si]);
    if (i < 2) continue;
    for (const auto& [key, col] : pos[si]) {
      auto below = pos[si - 2].find({key.first, key.second + 1});
      if (below != pos[si - 2].end()) m.c[si].at(below->second, col) = 1;
    }
  }
  return m;
}

GradedVS free_part_vs(const CModule& m) {
  GradedVS v;
  v.w = m.w;
  v.dims.assign(static_cast<size_t>(m.w.size()), 0);
  for (const Bar& b : m.decompose())
    if (b.free_) v.dims[static_cast<size_t>(m.w.idx(b.top))] += 1;
  return v;
}

ParityPair inverted_dims(const CModule& m) {
  ParityPair p;
  for (const Bar& b : m.decompose())
    if (b.free_) (parity_of(b.top) == 0 ? p.even : p.odd) += 1;
  return p;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  throw std::logic_error("to_string(Verdict): unhandled value");
}

long long inverted_column_dim(const GradedVS& v, int parity) {
  long long n = 0;
  for (int i : parity_indices(v.w, parity_of(parity))) n += v.dims[static_cast<size_t>(i)];
  return n;
}

namespace {

// Block-diagonal matrix of a degreewise family on the inverted column:
// one block per degree of the given parity, ascending.
RatMat inverted_column_map(const GradedVS& from, const GradedVS& to, const std::vector<RatMat>& f, int parity) {
  std::vector<RatMat> blocks;
  for (int i : parity_indices(from.w, parity_of(parity))) blocks.push_back(f[static_cast<size_t>(i)]);
  RatMat m = block_diag(blocks);
  (void)to;
  return m;
}

ParityPair vs_parity(const GradedVS& v) {
  ParityPair p;
  for (int d = v.w.lo; d <= v.w.hi; ++d) (parity_of(d) == 0 ? p.even : p.odd) += v.dim(d);
  return p;
}

}  // namespace

RatMat inverted_column_action(const GradedVS& v, const std::vector<RatMat>& gen, int parity) {
  return inverted_column_map(v, v, gen, parity);
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw std::invalid_argument(std::string(what) + ": empty point label");
    if (!seen.insert(l).second) throw std::invalid_argument(std::string(what) + ": duplicate point label " + l);
  }
}

void check_type1(const Type1Object& x) {
  check_window(x.w);
  check_vs(x.V, x.w, "type1 global space");
  std::vector<std::string> labels;
  for (const Type1Point& p : x.points) labels.push_back(p.label);
  check_labels(labels, "type1");
  for (const Type1Point& p : x.points) {
    check_cmodule(p.N, x.w, ("type1 point " + p.label).c_str());
    size_t ngen = static_cast<size_t>(group_generator_count(p.wk));
    if (p.gens_on_N.size() != ngen || p.gens_on_V.size() != ngen)
      throw std::invalid_argument("type1 point " + p.label + ": generator count does not match group");
    for (const auto& g : p.gens_on_N) check_degreewise(x.w, p.N.dims, p.N.dims, g, ("type1 point " + p.label).c_str());
    for (const auto& g : p.gens_on_V) check_degreewise(x.w, x.V.dims, x.V.dims, g, ("type1 point " + p.label).c_str());
    if (static_cast<int>(p.beta.size()) != x.w.size())
      throw std::invalid_argument("type1 point " + p.label + ": structure map length does not match window");
    for (int i = 0; i < x.w.size(); ++i) {
      const RatMat& b = p.beta[static_cast<size_t>(i)];
      if (b.rows != inverted_column_dim(x.V, parity_of(x.w.lo + i)) || b.cols != p.N.dims[static_cast<size_t>(i)])
        throw std::invalid_argument("type1 point " + p.label + ": structure map shape mismatch at degree " + std::to_string(x.w.lo + i));
    }
  }
}

}  // namespace

ValidationReport validate_type1(const Type1Object& x, int margin) {
  if (margin < 1) throw std::invalid_argument("validate_type1: margin must be positive");
  check_type1(x);
  ValidationReport r;
  std::string e = group_relation_error(x.V.group, x.V.action, x.V.dims);
  if (!e.empty()) r.failures.push_back({"action-relations", "", 0, "global group on V: " + e});
  for (const Type1Point& p : x.points) {
    e = group_relation_error(p.wk, p.gens_on_N, p.N.dims);
    if (!e.empty()) r.failures.push_back({"action-relations", p.label, 0, "point group on module: " + e});
    e = group_relation_error(p.wk, p.gens_on_V, x.V.dims);
    if (!e.empty()) r.failures.push_back({"action-relations", p.label, 0, "point group image on V: " + e});

    // c acts as the identity on the inverted column, so c-linearity of the
    // structure map reads: the map one degree pair down, precomposed with c.
    for (int i = 2; i < x.w.size(); ++i)
      if (!(p.beta[static_cast<size_t>(i - 2)] * p.N.c[static_cast<size_t>(i)] == p.beta[static_cast<size_t>(i)]))
        r.failures.push_back({"structure-map-c-linear", p.label, x.w.lo + i, "beta does not commute with c"});

    for (size_t g = 0; g < p.gens_on_N.size(); ++g)
      for (int i = 0; i < x.w.size(); ++i) {
        RatMat up = inverted_column_action(x.V, p.gens_on_V[g], parity_of(x.w.lo + i));
        if (!(up * p.beta[static_cast<size_t>(i)] == p.beta[static_cast<size_t>(i)] * p.gens_on_N[g][static_cast<size_t>(i)]))
          r.failures.push_back({"equivariance", p.label, x.w.lo + i, "generator " + std::to_string(g) + " does not commute with beta"});
      }

    bool margin_ok = true;
    for (const Bar& b : p.N.decompose())
      if (!b.free_ && b.top - 2 * (b.len - 1) < x.w.lo + 2 * margin) margin_ok = false;
    if (!margin_ok) {
      r.caveats.push_back("point " + p.label + ": torsion within " + std::to_string(margin) +
                          " steps of the window bottom; inverted-isomorphism check skipped");
      continue;
    }
    // Below all torsion, the module is its c-inverted form; the bottom
    // degree of each parity decides invertibility everywhere.
    for (int i = 0; i < 2 && i < x.w.size(); ++i) {
      long long nd = p.N.dims[static_cast<size_t>(i)];
      long long td = inverted_column_dim(x.V, parity_of(x.w.lo + i));
      if (nd != td) {
        r.failures.push_back({"inverted-isomorphism", p.label, x.w.lo + i,
                              "stable rank " + std::to_string(nd) + " vs column dimension " + std::to_string(td)});
        continue;
      }
      if (!is_invertible(p.beta[static_cast<size_t>(i)]))
        r.failures.push_back({"inverted-isomorphism", p.label, x.w.lo + i, "beta is singular at the window bottom"});
    }
  }
  finalize(r);
  return r;
}

namespace {

void check_type0(const Type0Object& x) {
  check_window(x.w);
  check_vs(x.FH, x.w, "type0 global stalk");
  std::vector<std::string> labels;
  for (const Type0Point& p : x.points) labels.push_back(p.label);
  check_labels(labels, "type0");
  for (const Type0Point& p : x.points) {
    check_vs(p.F, x.w, ("type0 point " + p.label).c_str());
    if (p.gens_on_FH.size() != static_cast<size_t>(group_generator_count(p.F.group)))
      throw std::invalid_argument("type0 point " + p.label + ": generator count does not match group");
    for (const auto& g : p.gens_on_FH) check_degreewise(x.w, x.FH.dims, x.FH.dims, g, ("type0 point " + p.label).c_str());
    check_degreewise(x.w, p.F.dims, x.FH.dims, p.spread, ("type0 point " + p.label).c_str());
  }
}

}  // namespace

ValidationReport validate_type0(const Type0Object& x) {
  check_type0(x);
  ValidationReport r;
  std::string e = group_relation_error(x.FH.group, x.FH.action, x.FH.dims);
  if (!e.empty()) r.failures.push_back({"action-relations", "", 0, "global group on stalk: " + e});
  for (const Type0Point& p : x.points) {
    e = group_relation_error(p.F.group, p.F.action, p.F.dims);
    if (!e.empty()) r.failures.push_back({"action-relations", p.label, 0, "point group on stalk: " + e});
    e = group_relation_error(p.F.group, p.gens_on_FH, x.FH.dims);
    if (!e.empty()) r.failures.push_back({"action-relations", p.label, 0, "point group image on global stalk: " + e});
    for (size_t g = 0; g < p.gens_on_FH.size(); ++g)
      for (int i = 0; i < x.w.size(); ++i)
        if (!(p.F.action[g][static_cast<size_t>(i)] * p.spread[static_cast<size_t>(i)] ==
              p.spread[static_cast<size_t>(i)] * p.gens_on_FH[g][static_cast<size_t>(i)]))
          r.failures.push_back({"equivariance", p.label, x.w.lo + i, "generator " + std::to_string(g) + " does not commute with the spreading map"});
  }
  // A kernel element of the spreading map must vanish at every
  // non-exceptional point; with finitely many points that means the
  // stacked matrix over them has full column rank. With no non-exceptional
  // point listed there is nothing to stack, so nothing can be concluded.
  bool any_regular = false;
  for (const Type0Point& p : x.points) any_regular = any_regular || !p.exceptional;
  bool fh_nonzero = false;
  for (long long d : x.FH.dims) fh_nonzero = fh_nonzero || d > 0;
  if (!any_regular && fh_nonzero) {
    r.caveats.push_back("every listed point is exceptional; spread injectivity cannot be checked");
  } else {
    for (int i = 0; i < x.w.size(); ++i) {
      RatMat stacked(0, x.FH.dims[static_cast<size_t>(i)]);
      for (const Type0Point& p : x.points)
        if (!p.exceptional) stacked = vstack(stacked, p.spread[static_cast<size_t>(i)]);
      long long krank = x.FH.dims[static_cast<size_t>(i)] - rank(stacked);
      if (krank > 0)
        r.failures.push_back({"spread-injectivity", "", x.w.lo + i,
                              "kernel of dimension " + std::to_string(krank) + " survives away from the exceptional set"});
    }
  }
  finalize(r);
  return r;
}

namespace {

void check_standard2d(const Standard2DObject& x) {
  check_window(x.w);
  check_labels(x.labels, "standard2d");
  if (x.base.size() != x.labels.size()) throw std::invalid_argument("standard2d: one base slot per label required");
  if (x.z_corner.size() != x.labels.size() + 1 || x.phi_z.size() != x.labels.size() + 1)
    throw std::invalid_argument("standard2d: vertical corner needs one slot per label plus the generic slot");
  for (size_t i = 0; i < x.base.size(); ++i) check_cmodule(x.base[i], x.w, ("standard2d slot " + x.labels[i]).c_str());
  check_cmodule(x.tail, x.w, "standard2d generic slot");
  check_cmodule(x.t_corner, x.w, "standard2d horizontal corner");
  check_cmodule(x.phi_t, x.w, "standard2d horizontal witness");
  for (size_t i = 0; i < x.phi_z.size(); ++i) check_vs(x.phi_z[i], x.w, "standard2d vertical witness");
  check_vs(x.phi_g, x.w, "standard2d top witness");
}

std::string pp(const ParityPair& p) { return "(" + std::to_string(p.even) + "," + std::to_string(p.odd) + ")"; }

}  // namespace

Standard2DObject make_standard2d(const Window& w, const std::vector<std::string>& labels,
                                 const std::vector<GradedVS>& phi_z, const CModule& phi_t,
                                 const GradedVS& phi_g,
                                 const std::vector<std::vector<Bar>>& base_torsion) {
  check_window(w);
  if (phi_z.size() != labels.size() + 1) throw std::invalid_argument("make_standard2d: need one vertical witness per label plus the generic slot");
  if (base_torsion.size() != labels.size()) throw std::invalid_argument("make_standard2d: need one torsion list per label");
  ParityPair ft = inverted_dims(phi_t);
  if (!(vs_parity(phi_g) == ft)) throw std::invalid_argument("make_standard2d: top witness does not match the free part of the generic slot");
  if (!(vs_parity(phi_z.back()) == ft)) throw std::invalid_argument("make_standard2d: generic vertical witness does not match the free part of the generic slot");
  Standard2DObject x;
  x.w = w;
  x.labels = labels;
  for (size_t i = 0; i < labels.size(); ++i) {
    std::vector<Bar> bars;
    for (int d = w.lo; d <= w.hi; ++d)
      for (long long t = 0; t < phi_z[i].dim(d); ++t) bars.push_back({d, 1, true});
    for (const Bar& b : base_torsion[i]) {
      if (b.free_) throw std::invalid_argument("make_standard2d: torsion list contains a free bar");
      bars.push_back(b);
    }
    x.base.push_back(module_from_bars(w, bars));
    x.z_corner.push_back(vs_parity(phi_z[i]));
  }
  x.tail = phi_t;
  x.z_corner.push_back(ft);
  x.t_corner = phi_t;
  x.g_corner = ft;
  x.phi_z = phi_z;
  x.phi_t = phi_t;
  x.phi_g = phi_g;
  return x;
}

ValidationReport validate_standard2d(const Standard2DObject& x, int margin) {
  if (margin < 1) throw std::invalid_argument("validate_standard2d: margin must be positive");
  check_standard2d(x);
  ValidationReport r;
  auto inverted_checked = [&](const CModule& m, const std::string& where) -> std::pair<bool, ParityPair> {
    for (const Bar& b : m.decompose())
      if (!b.free_ && b.top - 2 * (b.len - 1) < x.w.lo + 2 * margin) {
        r.caveats.push_back(where + ": torsion within " + std::to_string(margin) + " steps of the window bottom");
        return {false, {}};
      }
    return {true, inverted_dims(m)};
  };
  for (size_t i = 0; i < x.labels.size(); ++i) {
    auto [ok, zp] = inverted_checked(x.base[i], "slot " + x.labels[i]);
    if (ok && !(zp == x.z_corner[i]))
      r.failures.push_back({"quasicoherence-vertical", x.labels[i], 0,
                            "inverting the base slot gives " + pp(zp) + ", stored corner is " + pp(x.z_corner[i])});
    if (!(vs_parity(x.phi_z[i]) == x.z_corner[i]))
      r.failures.push_back({"extendedness-vertical", x.labels[i], 0,
                            "witness extends to " + pp(vs_parity(x.phi_z[i])) + ", stored corner is " + pp(x.z_corner[i])});
  }
  auto [tail_ok, tail_inv] = inverted_checked(x.tail, "generic slot");
  if (tail_ok && !(tail_inv == x.z_corner.back()))
    r.failures.push_back({"quasicoherence-vertical", "generic", 0,
                          "inverting the generic slot gives " + pp(tail_inv) + ", stored corner is " + pp(x.z_corner.back())});
  if (!(vs_parity(x.phi_z.back()) == x.z_corner.back()))
    r.failures.push_back({"extendedness-vertical", "generic", 0, "generic witness does not match the stored corner"});
  if (!(x.t_corner == x.tail))
    r.failures.push_back({"quasicoherence-horizontal", "generic", 0, "horizontal corner differs from the generic slot"});
  if (tail_ok && !(x.g_corner == tail_inv))
    r.failures.push_back({"quasicoherence-top", "generic", 0,
                          "inverting the generic slot gives " + pp(tail_inv) + ", stored top corner is " + pp(x.g_corner)});
  if (!(x.phi_t == x.t_corner))
    r.failures.push_back({"extendedness-horizontal", "generic", 0, "horizontal witness differs from the stored corner"});
  if (!(vs_parity(x.phi_g) == x.g_corner))
    r.failures.push_back({"extendedness-top", "generic", 0,
                          "top witness extends to " + pp(vs_parity(x.phi_g)) + ", stored corner is " + pp(x.g_corner)});
  // The two localization orders must land in the same module.
  auto [tc_ok, tc_inv] = inverted_checked(x.t_corner, "horizontal corner");
  if (tc_ok && !(tc_inv == x.z_corner.back()))
    r.failures.push_back({"localization-square", "", 0,
                          "inverting the horizontal corner gives " + pp(tc_inv) + ", vertical corner holds " + pp(x.z_corner.back())});
  finalize(r);
  return r;
}

namespace {

void check_polymodule(const PolyModule& m, const Window& w) {
  check_dims(w, m.dims, "zero-dim module");
  if (m.w.lo != w.lo || m.w.hi != w.hi) throw std::invalid_argument("zero-dim module: window mismatch");
  for (const auto& op : m.ops) check_lowering(w, m.dims, op, "zero-dim module");
  std::string e = group_relation_error(m.group, m.action, m.dims);
  if (!e.empty()) throw std::invalid_argument("zero-dim module: " + e);
}

}  // namespace

ZeroDimObject zero_dim_object(const SubgroupClass& H, const PolyModule& M) {
  WeylData wd = weyl(H);
  if (wd.flavor != WeylFlavor::Torus)
    throw std::invalid_argument("zero_dim_object: identity component is not a torus, so the codegree-2 polynomial model does not apply");
  check_window(M.w);
  check_polymodule(M, M.w);
  size_t r = static_cast<size_t>(wd.identity_rank);
  if (M.ops.size() < r) throw std::invalid_argument("zero_dim_object: module has fewer operators than the ring has generators");
  for (size_t v = r; v < M.ops.size(); ++v)
    for (const RatMat& op : M.ops[v])
      if (!is_zero(op)) throw std::invalid_argument("zero_dim_object: operator beyond the ring rank acts nonzero");
  if (M.group != wd.component)
    throw std::invalid_argument("zero_dim_object: component group is " + to_string(wd.component) + ", module carries " + to_string(M.group));
  // Ring operators commute pairwise.
  for (size_t p = 0; p < M.ops.size(); ++p)
    for (size_t q = p + 1; q < M.ops.size(); ++q)
      for (int i = 4; i < M.w.size(); ++i)
        if (!(M.ops[p][static_cast<size_t>(i - 2)] * M.ops[q][static_cast<size_t>(i)] ==
              M.ops[q][static_cast<size_t>(i - 2)] * M.ops[p][static_cast<size_t>(i)]))
          throw std::invalid_argument("zero_dim_object: ring operators do not commute at degree " + std::to_string(M.w.lo + i));
  // The component group moves the ring generators by the prescribed twist.
  for (size_t g = 0; g < M.action.size(); ++g)
    for (size_t v = 0; v < r; ++v) {
      size_t vt = wd.twist == WeylTwist::SwapCC ? 1 - v : v;
      for (int i = 2; i < M.w.size(); ++i) {
        RatMat lhs = M.action[g][static_cast<size_t>(i - 2)] * M.ops[v][static_cast<size_t>(i)];
        RatMat rhs = M.ops[vt][static_cast<size_t>(i)] * M.action[g][static_cast<size_t>(i)];
        if (wd.twist == WeylTwist::NegateC) rhs = RatMat(rhs.rows, rhs.cols) - rhs;
        if (!(lhs == rhs))
          throw std::invalid_argument("zero_dim_object: action does not respect the twist at degree " + std::to_string(M.w.lo + i));
      }
    }
  // Torsion certificate: the support must die before the window edge. A
  // finitely supported module is killed by a power of the augmentation
  // ideal, but a bar touching the bottom band may continue below the
  // window, so it cannot be certified. Rank 0 has no ideal to apply.
  if (r > 0)
    for (int i = 0; i < 2 && i < M.w.size(); ++i)
      if (M.dims[static_cast<size_t>(i)] != 0)
        throw std::invalid_argument("zero_dim_object: support reaches the window bottom at degree " + std::to_string(M.w.lo + i) +
                                    ", so torsion cannot be certified; widen the window");
  return {H, wd, M};
}

std::string morphism_error(const Type1Morphism& f, const Type1Object& x, const Type1Object& y) {
  if (!(x.w == y.w)) return "window mismatch";
  if (x.V.group != y.V.group) return "global component groups differ";
  if (x.points.size() != y.points.size()) return "point sets differ";
  for (size_t p = 0; p < x.points.size(); ++p) {
    if (x.points[p].label != y.points[p].label) return "point labels differ at position " + std::to_string(p);
    if (x.points[p].wk != y.points[p].wk) return "point component groups differ at " + x.points[p].label;
  }
  if (f.fN.size() != x.points.size()) return "morphism has wrong number of point families";
  if (f.fV.size() != static_cast<size_t>(x.w.size())) return "global family length does not match window";
  for (int i = 0; i < x.w.size(); ++i) {
    size_t si = static_cast<size_t>(i);
    if (f.fV[si].rows != y.V.dims[si] || f.fV[si].cols != x.V.dims[si]) return "global family shape mismatch at degree " + std::to_string(x.w.lo + i);
  }
  for (size_t p = 0; p < x.points.size(); ++p) {
    const Type1Point& xp = x.points[p];
    const Type1Point& yp = y.points[p];
    if (f.fN[p].size() != static_cast<size_t>(x.w.size())) return xp.label + ": family length does not match window";
    for (int i = 0; i < x.w.size(); ++i) {
      size_t si = static_cast<size_t>(i);
      if (f.fN[p][si].rows != yp.N.dims[si] || f.fN[p][si].cols != xp.N.dims[si])
        return xp.label + ": shape mismatch at degree " + std::to_string(x.w.lo + i);
    }
    for (int i = 2; i < x.w.size(); ++i) {
      size_t si = static_cast<size_t>(i);
      if (!(f.fN[p][si - 2] * xp.N.c[si] == yp.N.c[si] * f.fN[p][si])) return xp.label + ": does not commute with c at degree " + std::to_string(x.w.lo + i);
    }
    for (int i = 0; i < x.w.size(); ++i) {
      size_t si = static_cast<size_t>(i);
      RatMat up = inverted_column_map(x.V, y.V, f.fV, parity_of(x.w.lo + i));
      if (!(up * xp.beta[si] == yp.beta[si] * f.fN[p][si])) return xp.label + ": does not commute with the structure map at degree " + std::to_string(x.w.lo + i);
    }
    for (size_t g = 0; g < xp.gens_on_N.size(); ++g)
      for (int i = 0; i < x.w.size(); ++i) {
        size_t si = static_cast<size_t>(i);
        if (!(f.fN[p][si] * xp.gens_on_N[g][si] == yp.gens_on_N[g][si] * f.fN[p][si]))
          return xp.label + ": not equivariant on the module at degree " + std::to_string(x.w.lo + i);
        if (!(f.fV[si] * xp.gens_on_V[g][si] == yp.gens_on_V[g][si] * f.fV[si]))
          return xp.label + ": not equivariant on V at degree " + std::to_string(x.w.lo + i);
      }
  }
  for (size_t g = 0; g < x.V.action.size(); ++g)
    for (int i = 0; i < x.w.size(); ++i) {
      size_t si = static_cast<size_t>(i);
      if (!(f.fV[si] * x.V.action[g][si] == y.V.action[g][si] * f.fV[si])) return "global family not equivariant at degree " + std::to_string(x.w.lo + i);
    }
  return "";
}

Type1Morphism identity_morphism(const Type1Object& x) {
  Type1Morphism f;
  for (const Type1Point& p : x.points) {
    std::vector<RatMat> fam;
    for (long long d : p.N.dims) fam.push_back(RatMat::identity(d));
    f.fN.push_back(std::move(fam));
  }
  for (long long d : x.V.dims) f.fV.push_back(RatMat::identity(d));
  return f;
}

Type1Morphism zero_morphism(const Type1Object& x, const Type1Object& y) {
  Type1Morphism f;
  for (size_t p = 0; p < x.points.size(); ++p) {
    std::vector<RatMat> fam;
    for (size_t i = 0; i < x.points[p].N.dims.size(); ++i) fam.push_back(RatMat(y.points[p].N.dims[i], x.points[p].N.dims[i]));
    f.fN.push_back(std::move(fam));
  }
  for (size_t i = 0; i < x.V.dims.size(); ++i) f.fV.push_back(RatMat(y.V.dims[i], x.V.dims[i]));
  return f;
}

namespace {

void require_morphism(const Type1Morphism& f, const Type1Object& x, const Type1Object& y) {
  check_type1(x);
  check_type1(y);
  std::string e = morphism_error(f, x, y);
  if (!e.empty()) throw std::invalid_argument("type1 morphism rejected: " + e);
}

// Conjugates a degreewise family into subspace coordinates: basis[i] spans
// an invariant subspace, result solves basis * out = fam * basis.
std::vector<RatMat> restrict_family(const std::vector<RatMat>& basis, const std::vector<RatMat>& fam,
                                    const std::vector<RatMat>& basis_cod) {
  std::vector<RatMat> out;
  for (size_t i = 0; i < fam.size(); ++i) out.push_back(solve(basis_cod[i], fam[i] * basis[i]));
  return out;
}

std::vector<RatMat> shift_targets(const std::vector<RatMat>& basis) {
  // basis_cod[i] = basis at i-2, or an empty anchor below the window.
  std::vector<RatMat> out(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) out[i] = i >= 2 ? basis[i - 2] : RatMat(0, 0);
  return out;
}

std::vector<long long> mat_cols(const std::vector<RatMat>& fam) {
  std::vector<long long> out;
  for (const RatMat& m : fam) out.push_back(m.cols);
  return out;
}

}  // namespace

Type1Sub kernel(const Type1Morphism& f, const Type1Object& x, const Type1Object& y) {
  require_morphism(f, x, y);
  Type1Sub out;
  out.object.w = x.w;
  std::vector<RatMat> kv;
  for (const RatMat& m : f.fV) kv.push_back(kernel_basis(m));
  out.object.V.w = x.w;
  out.object.V.dims = mat_cols(kv);
  out.object.V.group = x.V.group;
  for (const auto& g : x.V.action) out.object.V.action.push_back(restrict_family(kv, g, kv));
  for (size_t p = 0; p < x.points.size(); ++p) {
    const Type1Point& xp = x.points[p];
    std::vector<RatMat> kn;
    for (const RatMat& m : f.fN[p]) kn.push_back(kernel_basis(m));
    Type1Point q;
    q.label = xp.label;
    q.wk = xp.wk;
    q.N.w = x.w;
    q.N.dims = mat_cols(kn);
    {
      // c restricted to the kernel; the anchor rows below the window are zero.
      std::vector<RatMat> cod = shift_targets(kn);
      for (size_t i = 0; i < cod.size(); ++i)
        if (i < 2) cod[i] = RatMat(0, q.N.dims[i]);
      q.N.c.resize(kn.size());
      for (size_t i = 0; i < kn.size(); ++i)
        q.N.c[i] = i >= 2 ? solve(kn[i - 2], xp.N.c[i] * kn[i]) : RatMat(0, q.N.dims[i]);
    }
    for (const auto& g : xp.gens_on_N) q.gens_on_N.push_back(restrict_family(kn, g, kn));
    for (const auto& g : xp.gens_on_V) q.gens_on_V.push_back(restrict_family(kv, g, kv));
    for (int i = 0; i < x.w.size(); ++i) {
      RatMat inc = inverted_column_map(out.object.V, x.V, kv, parity_of(x.w.lo + i));
      q.beta.push_back(solve(inc, xp.beta[static_cast<size_t>(i)] * kn[static_cast<size_t>(i)]));
    }
    out.object.points.push_back(std::move(q));
    out.embed.fN.push_back(std::move(kn));
  }
  out.embed.fV = kv;
  return out;
}

Type1Quot cokernel(const Type1Morphism& f, const Type1Object& x, const Type1Object& y) {
  require_morphism(f, x, y);
  Type1Quot out;
  out.object.w = y.w;
  std::vector<RatMat> qv, rv;
  for (const RatMat& m : f.fV) {
    RatMat q = left_kernel_basis(m);
    rv.push_back(right_inverse(q));
    qv.push_back(std::move(q));
  }
  out.object.V.w = y.w;
  out.object.V.group = y.V.group;
  for (const RatMat& q : qv) out.object.V.dims.push_back(q.rows);
  for (const auto& g : y.V.action) {
    std::vector<RatMat> fam;
    for (size_t i = 0; i < qv.size(); ++i) fam.push_back(qv[i] * g[i] * rv[i]);
    out.object.V.action.push_back(std::move(fam));
  }
  for (size_t p = 0; p < y.points.size(); ++p) {
    const Type1Point& yp = y.points[p];
    std::vector<RatMat> qn, rn;
    for (const RatMat& m : f.fN[p]) {
      RatMat q = left_kernel_basis(m);
      rn.push_back(right_inverse(q));
      qn.push_back(std::move(q));
    }
    Type1Point q;
    q.label = yp.label;
    q.wk = yp.wk;
    q.N.w = y.w;
    for (const RatMat& m : qn) q.N.dims.push_back(m.rows);
    q.N.c.resize(qn.size());
    for (size_t i = 0; i < qn.size(); ++i) q.N.c[i] = i >= 2 ? qn[i - 2] * yp.N.c[i] * rn[i] : RatMat(0, q.N.dims[i]);
    for (const auto& g : yp.gens_on_N) {
      std::vector<RatMat> fam;
      for (size_t i = 0; i < qn.size(); ++i) fam.push_back(qn[i] * g[i] * rn[i]);
      q.gens_on_N.push_back(std::move(fam));
    }
    for (const auto& g : yp.gens_on_V) {
      std::vector<RatMat> fam;
      for (size_t i = 0; i < qv.size(); ++i) fam.push_back(qv[i] * g[i] * rv[i]);
      q.gens_on_V.push_back(std::move(fam));
    }
    for (int i = 0; i < y.w.size(); ++i) {
      RatMat proj = inverted_column_map(y.V, out.object.V, qv, parity_of(y.w.lo + i));
      q.beta.push_back(proj * yp.beta[static_cast<size_t>(i)] * rn[static_cast<size_t>(i)]);
    }
    out.object.points.push_back(std::move(q));
    out.project.fN.push_back(std::move(qn));
  }
  out.project.fV = qv;
  return out;
}

Type1Object direct_sum(const Type1Object& x, const Type1Object& y) {
  check_type1(x);
  check_type1(y);
  if (!(x.w == y.w)) throw std::invalid_argument("direct_sum: window mismatch");
  if (x.V.group != y.V.group) throw std::invalid_argument("direct_sum: global component groups differ");
  if (x.points.size() != y.points.size()) throw std::invalid_argument("direct_sum: point sets differ");
  for (size_t p = 0; p < x.points.size(); ++p)
    if (x.points[p].label != y.points[p].label || x.points[p].wk != y.points[p].wk)
      throw std::invalid_argument("direct_sum: point sets differ at " + x.points[p].label);
  Type1Object s;
  s.w = x.w;
  s.V.w = x.w;
  s.V.group = x.V.group;
  std::vector<RatMat> embx, emby;
  for (size_t i = 0; i < x.V.dims.size(); ++i) {
    long long nx = x.V.dims[i], ny = y.V.dims[i];
    s.V.dims.push_back(nx + ny);
    RatMat ex(nx + ny, nx), ey(nx + ny, ny);
    for (long long j = 0; j < nx; ++j) ex.at(j, j) = 1;
    for (long long j = 0; j < ny; ++j) ey.at(nx + j, j) = 1;
    embx.push_back(std::move(ex));
    emby.push_back(std::move(ey));
  }
  for (size_t g = 0; g < x.V.action.size(); ++g) {
    std::vector<RatMat> fam;
    for (size_t i = 0; i < s.V.dims.size(); ++i) fam.push_back(block_diag({x.V.action[g][i], y.V.action[g][i]}));
    s.V.action.push_back(std::move(fam));
  }
  for (size_t p = 0; p < x.points.size(); ++p) {
    const Type1Point& xp = x.points[p];
    const Type1Point& yp = y.points[p];
    Type1Point q;
    q.label = xp.label;
    q.wk = xp.wk;
    q.N.w = x.w;
    for (size_t i = 0; i < xp.N.dims.size(); ++i) q.N.dims.push_back(xp.N.dims[i] + yp.N.dims[i]);
    for (size_t i = 0; i < xp.N.c.size(); ++i) {
      RatMat m = block_diag({xp.N.c[i], yp.N.c[i]});
      if (i < 2) m = RatMat(0, q.N.dims[i]);
      q.N.c.push_back(std::move(m));
    }
    for (size_t g = 0; g < xp.gens_on_N.size(); ++g) {
      std::vector<RatMat> fam;
      for (size_t i = 0; i < q.N.dims.size(); ++i) fam.push_back(block_diag({xp.gens_on_N[g][i], yp.gens_on_N[g][i]}));
      q.gens_on_N.push_back(std::move(fam));
    }
    for (size_t g = 0; g < xp.gens_on_V.size(); ++g) {
      std::vector<RatMat> fam;
      for (size_t i = 0; i < s.V.dims.size(); ++i) fam.push_back(block_diag({xp.gens_on_V[g][i], yp.gens_on_V[g][i]}));
      q.gens_on_V.push_back(std::move(fam));
    }
    for (int i = 0; i < x.w.size(); ++i) {
      int par = parity_of(x.w.lo + i);
      RatMat upx = inverted_column_map(x.V, s.V, embx, par) * xp.beta[static_cast<size_t>(i)];
      RatMat upy = inverted_column_map(y.V, s.V, emby, par) * yp.beta[static_cast<size_t>(i)];
      RatMat b(upx.rows, upx.cols + upy.cols);
      for (long long r2 = 0; r2 < b.rows; ++r2) {
        for (long long c2 = 0; c2 < upx.cols; ++c2) b.at(r2, c2) = upx.at(r2, c2);
        for (long long c2 = 0; c2 < upy.cols; ++c2) b.at(r2, upx.cols + c2) = upy.at(r2, c2);
      }
      q.beta.push_back(std::move(b));
    }
    s.points.push_back(std::move(q));
  }
  return s;
}

Type1Object restrict_easy_block(const Type1Object& x, CentralType t) {
  check_type1(x);
  ComponentGroupKind want = so3_weyl_component(t);
  if (x.V.group != want)
    throw std::invalid_argument("restrict_easy_block: object carries " + to_string(x.V.group) + ", block symmetry is " + to_string(want));
  std::vector<long long> orbits = fused_orbit_sizes(t);
  Type1Object out;
  out.w = x.w;
  out.V.w = x.w;
  out.V.dims = x.V.dims;
  for (const Type1Point& p : x.points) {
    if (p.wk != want) throw std::invalid_argument("restrict_easy_block: point " + p.label + " carries " + to_string(p.wk));
    if (p.label.size() < 2 || p.label[0] != 'c')
      throw std::invalid_argument("restrict_easy_block: point labels must name fused classes as c<index>");
    size_t idx = 0;
    try {
      idx = std::stoul(p.label.substr(1));
    } catch (...) {
      throw std::invalid_argument("restrict_easy_block: point labels must name fused classes as c<index>");
    }
    if (idx >= orbits.size()) throw std::invalid_argument("restrict_easy_block: class index out of range for this type");
    for (long long rep = 0; rep < orbits[idx]; ++rep) {
      Type1Point q;
      q.label = p.label + "/" + std::to_string(rep);
      q.N = p.N;
      q.beta = p.beta;
      out.points.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace u2
