#include "u2/cli.hpp"

#include "u2/blocks.hpp"
#include "u2/finite_model.hpp"
#include "u2/flags.hpp"
#include "u2/io.hpp"
#include "u2/model.hpp"
#include "u2/unitary_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace u2 {

using nlohmann::json;

namespace {

struct Ctx {
  bool json_mode = false;
  long long seed = 42;
  long long truncation = 4;
  double tol = 1e-6;
  int code = 0;
  std::ostringstream out;
};

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// Positional object arguments are inline JSON or a path to a JSON file.
std::string load_object_arg(const std::string& arg) {
  size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string flavor_name(WeylFlavor f) {
  switch (f) {
    case WeylFlavor::Torus: return "torus";
    case WeylFlavor::SO3: return "so3";
    case WeylFlavor::U2: return "u2";
  }
  return "?";
}

std::string twist_name(WeylTwist t) {
  switch (t) {
    case WeylTwist::None: return "none";
    case WeylTwist::NegateC: return "negate-c";
    case WeylTwist::SwapCC: return "swap-cc";
  }
  return "?";
}

CentralType central_type_from(const std::string& s) {
  if (s == "SU2") return CentralType::SU2;
  if (s == "A5") return CentralType::A5;
  if (s == "Sigma4") return CentralType::Sigma4;
  if (s == "A4") return CentralType::A4;
  if (s == "D4") return CentralType::D4;
  throw std::invalid_argument("unknown type " + s + " (expected SU2, A5, Sigma4, A4 or D4)");
}

BlockId block_from(const std::string& s) {
  for (BlockId b : all_blocks())
    if (to_string(b) == s) return b;
  throw std::invalid_argument("unknown block " + s);
}

// ---------------------------------------------------------------------------
// Diagrams. The toral piece is drawn as the third-quadrant square with the
// class at position (m, n) placed at (-1/n, -1/m), so index-raising in m
// moves up the page and every emitted cotoral edge ascends strictly. The
// other pieces are drawn as leveled Hasse diagrams of their census at the
// truncation, longest-chain level deciding the height.
// ---------------------------------------------------------------------------

struct Pt {
  double x, y;
};

constexpr double kPad = 60, kSide = 420;

Pt square_pos(long long m_or_inf, long long n_or_inf) {
  double u = n_or_inf == 0 ? 0.0 : -1.0 / static_cast<double>(n_or_inf);
  double v = m_or_inf == 0 ? 0.0 : -1.0 / static_cast<double>(m_or_inf);
  return {kPad + (u + 1.0) * kSide, kPad + (-v) * kSide};
}

std::string square_name(long long m, long long n) {
  auto part = [](long long k) { return k == 0 ? std::string("inf") : std::to_string(k); };
  return part(m) + "," + part(n);
}

// Markers at every (m, n) up to the truncation plus the two limit edges
// and the full torus; doubled markers where the even-parity family
// coexists; edges are the strictly ascending cotoral covers (the
// horizontal limit inclusions (m,n) -> (m,inf) are real but flat, so they
// are left out of the picture).
std::string emit_square(long long M, const std::string& format) {
  struct Marker {
    long long m, n;  // 0 encodes infinity
    bool doubled;
  };
  std::vector<Marker> marks;
  std::vector<std::pair<std::string, std::string>> edges;
  for (long long m = 1; m <= M; ++m)
    for (long long n = 1; n <= M; ++n) {
      marks.push_back({m, n, (m + n) % 2 == 0});
      edges.emplace_back(square_name(m, n), square_name(0, n));
    }
  for (long long m = 1; m <= M; ++m) {
    marks.push_back({m, 0, false});
    edges.emplace_back(square_name(m, 0), square_name(0, 0));
  }
  for (long long n = 1; n <= M; ++n) marks.push_back({0, n, false});
  marks.push_back({0, 0, false});

  std::ostringstream d;
  if (format == "dot") {
    d << "digraph toral_square {\n  node [shape=circle fixedsize=true width=0.25 fontsize=8];\n";
    for (const Marker& k : marks) {
      Pt p = square_pos(k.m, k.n);
      d << "  \"" << square_name(k.m, k.n) << "\" [pos=\"" << fmt2(p.x / 72) << "," << fmt2((kSide + 2 * kPad - p.y) / 72)
        << "!\"" << (k.doubled ? " shape=doublecircle" : "") << "];\n";
    }
    for (const auto& e : edges) d << "  \"" << e.first << "\" -> \"" << e.second << "\";\n";
    d << "}\n";
    return d.str();
  }
  double w = kSide + 2 * kPad;
  d << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w) << "\" height=\"" << fmt2(w)
    << "\" viewBox=\"0 0 " << fmt2(w) << " " << fmt2(w) << "\">\n";
  d << "<rect x=\"" << fmt2(kPad) << "\" y=\"" << fmt2(kPad) << "\" width=\"" << fmt2(kSide) << "\" height=\""
    << fmt2(kSide) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (const auto& e : edges) {
    // names recover positions; edges are drawn beneath the markers
    auto split = [](const std::string& s) {
      size_t c = s.find(',');
      auto part = [](const std::string& t) { return t == "inf" ? 0LL : std::stoll(t); };
      return std::pair<long long, long long>(part(s.substr(0, c)), part(s.substr(c + 1)));
    };
    auto [am, an] = split(e.first);
    auto [bm, bn] = split(e.second);
    Pt a = square_pos(am, an), b = square_pos(bm, bn);
    d << "<line x1=\"" << fmt2(a.x) << "\" y1=\"" << fmt2(a.y) << "\" x2=\"" << fmt2(b.x) << "\" y2=\"" << fmt2(b.y)
      << "\" stroke=\"#555\"/>\n";
  }
  for (const Marker& k : marks) {
    Pt p = square_pos(k.m, k.n);
    d << "<circle cx=\"" << fmt2(p.x) << "\" cy=\"" << fmt2(p.y) << "\" r=\"5\" fill=\"#fff\" stroke=\"#000\"/>\n";
    if (k.doubled)
      d << "<circle cx=\"" << fmt2(p.x) << "\" cy=\"" << fmt2(p.y) << "\" r=\"8.5\" fill=\"none\" stroke=\"#000\"/>\n";
    std::string label = k.m == 0 && k.n == 0 ? "T" : square_name(k.m, k.n);
    d << "<text x=\"" << fmt2(p.x + 9) << "\" y=\"" << fmt2(p.y - 6) << "\" font-size=\"9\" font-family=\"monospace\">"
      << label << "</text>\n";
  }
  d << "</svg>\n";
  return d.str();
}

std::string emit_hasse(BlockId b, long long M, const std::string& format) {
  std::vector<SubgroupClass> nodes;
  for (const SubgroupClass& k : enumerate_subgroups(M))
    if (block_of(k) == b) nodes.push_back(k);
  SubgroupClass dom = block_info(b).dominant;
  bool have = false;
  for (const SubgroupClass& k : nodes) have = have || k == dom;
  if (!have) nodes.push_back(dom);
  std::sort(nodes.begin(), nodes.end(),
            [](const SubgroupClass& x, const SubgroupClass& y) { return to_string(x) < to_string(y); });

  size_t n = nodes.size();
  auto strictly_below = [&](size_t i, size_t j) {
    return !(nodes[i] == nodes[j]) && is_cotoral(nodes[i], nodes[j]) && !is_cotoral(nodes[j], nodes[i]);
  };
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) lt[i][j] = strictly_below(i, j);

  std::vector<int> level(n, 0);
  for (size_t round = 0; round < n; ++round)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (lt[i][j] && level[j] < level[i] + 1) level[j] = level[i] + 1;

  std::vector<std::pair<size_t, size_t>> covers;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool covered = true;
      for (size_t k = 0; k < n && covered; ++k) covered = !(lt[i][k] && lt[k][j]);
      if (covered) covers.emplace_back(i, j);
    }

  int maxlevel = 0;
  for (int l : level) maxlevel = std::max(maxlevel, l);
  std::vector<int> slot(n, 0), filled(static_cast<size_t>(maxlevel) + 1, 0);
  int width = 1;
  for (size_t i = 0; i < n; ++i) {  // nodes are sorted, so slots are deterministic
    slot[i] = filled[static_cast<size_t>(level[i])]++;
    width = std::max(width, slot[i] + 1);
  }
  auto pos = [&](size_t i) {
    return Pt{kPad + (slot[i] + 0.5) * 150.0, kPad + (maxlevel - level[i]) * 90.0 + 10.0};
  };

  std::ostringstream d;
  if (format == "dot") {
    d << "digraph block_" << to_string(b) << " {\n  rankdir=BT;\n  node [shape=box fontsize=9];\n";
    for (size_t i = 0; i < n; ++i) d << "  \"" << to_string(nodes[i]) << "\";\n";
    for (const auto& e : covers) d << "  \"" << to_string(nodes[e.first]) << "\" -> \"" << to_string(nodes[e.second]) << "\";\n";
    d << "}\n";
    return d.str();
  }
  double w = 2 * kPad + width * 150.0, h = 2 * kPad + maxlevel * 90.0 + 20.0;
  d << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w) << "\" height=\"" << fmt2(h)
    << "\" viewBox=\"0 0 " << fmt2(w) << " " << fmt2(h) << "\">\n";
  for (const auto& e : covers) {
    Pt a = pos(e.first), bp = pos(e.second);
    d << "<line x1=\"" << fmt2(a.x) << "\" y1=\"" << fmt2(a.y) << "\" x2=\"" << fmt2(bp.x) << "\" y2=\"" << fmt2(bp.y)
      << "\" stroke=\"#555\"/>\n";
  }
  for (size_t i = 0; i < n; ++i) {
    Pt p = pos(i);
    d << "<circle cx=\"" << fmt2(p.x) << "\" cy=\"" << fmt2(p.y) << "\" r=\"5\" fill=\"#fff\" stroke=\"#000\"/>\n";
    d << "<text x=\"" << fmt2(p.x) << "\" y=\"" << fmt2(p.y + 18) << "\" font-size=\"9\" font-family=\"monospace\" text-anchor=\"middle\">"
      << to_string(nodes[i]) << "</text>\n";
  }
  d << "</svg>\n";
  return d.str();
}

json weyl_json(const WeylData& wd) {
  return json{{"identity_rank", wd.identity_rank},
              {"flavor", flavor_name(wd.flavor)},
              {"ring", ring_string(wd)},
              {"component", to_string(wd.component)},
              {"twist", twist_name(wd.twist)}};
}

json count_json(CentralType x) {
  FullClassCount c = count_full_classes(x);
  return json{{"type", to_string(x)},
              {"preimage_classes", c.preimage_classes},
              {"fused_classes", c.fused_classes},
              {"orbit_sizes", fused_orbit_sizes(x)}};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Ctx ctx;
  CLI::App app{"Subgroup classification, block partition and algebraic-model toolkit for U(2)"};
  app.require_subcommand(1);

  app.add_flag("--json", ctx.json_mode, "machine-readable output");
  app.add_option("--seed", ctx.seed, "random seed for sampling oracles");
  app.add_option("--truncation", ctx.truncation, "position-parameter bound for census subcommands");
  app.add_option("--tol", ctx.tol, "numerical tolerance for the fusion oracle");

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // enumerate-lattices
  {
    auto* c = sub("enumerate-lattices", "swap-invariant rank-2 sublattices up to an index bound");
    auto max_index = std::make_shared<long long>(8);
    c->add_option("--max-index", *max_index, "index bound (default 8)");
    c->callback([&ctx, max_index] {
      auto all = enumerate_invariant(Int(*max_index));
      if (ctx.json_mode) {
        json arr = json::array();
        for (const TaggedLattice& t : all)
          arr.push_back(json{{"class", json::parse(lattice_class_to_json(t.cls))},
                             {"index", to_string(t.lattice.index())},
                             {"lattice", json::parse(lattice_to_json(t.lattice))}});
        ctx.out << arr.dump(2) << "\n";
      } else {
        for (const TaggedLattice& t : all)
          ctx.out << to_string(t.lattice) << "  index " << to_string(t.lattice.index()) << "\n";
        ctx.out << all.size() << " lattices\n";
      }
    });
  }

  // classify-lattice
  {
    auto* c = sub("classify-lattice", "name the swap-family of a lattice given as JSON");
    auto arg = std::make_shared<std::string>();
    c->add_option("lattice", *arg, "lattice JSON or a path to it")->required();
    c->callback([&ctx, arg] {
      LatticeClass cls = classify(lattice_from_json(load_object_arg(*arg)));
      if (ctx.json_mode)
        ctx.out << lattice_class_to_json(cls) << "\n";
      else
        ctx.out << to_string(cls) << "\n";
    });
  }

  // enumerate-subgroups
  {
    auto* c = sub("enumerate-subgroups", "census of conjugacy-class descriptors at the truncation");
    c->callback([&ctx] {
      auto all = enumerate_subgroups(Int(ctx.truncation));
      if (ctx.json_mode) {
        json arr = json::array();
        for (const SubgroupClass& k : all) arr.push_back(json::parse(subgroup_to_json(k)));
        ctx.out << arr.dump(2) << "\n";
      } else {
        for (const SubgroupClass& k : all) ctx.out << to_string(k) << "\n";
        ctx.out << all.size() << " classes\n";
      }
    });
  }

  // block-of
  {
    auto* c = sub("block-of", "partition piece of a descriptor");
    auto arg = std::make_shared<std::string>();
    c->add_option("subgroup", *arg, "subgroup JSON or a path to it")->required();
    c->callback([&ctx, arg] {
      BlockId b = block_of(subgroup_from_json(load_object_arg(*arg)));
      if (ctx.json_mode)
        ctx.out << json{{"block", to_string(b)}}.dump(2) << "\n";
      else
        ctx.out << to_string(b) << "\n";
    });
  }

  // validate-partition
  {
    auto* c = sub("validate-partition", "exhaustive partition laws over the census");
    c->callback([&ctx] {
      PartitionReport r = validate_partition(Int(ctx.truncation));
      if (ctx.json_mode) {
        ctx.out << r.to_json() << "\n";
      } else {
        for (const auto& [id, count] : r.block_counts) ctx.out << to_string(id) << ": " << count << "\n";
        ctx.out << r.violations.size() << " violations\n";
      }
      if (!r.violations.empty()) ctx.code = 1;
    });
  }

  // weyl
  {
    auto* c = sub("weyl", "normalizer quotient data of a descriptor");
    auto arg = std::make_shared<std::string>();
    c->add_option("subgroup", *arg, "subgroup JSON or a path to it")->required();
    c->callback([&ctx, arg] {
      WeylData wd = weyl(subgroup_from_json(load_object_arg(*arg)));
      if (ctx.json_mode)
        ctx.out << weyl_json(wd).dump(2) << "\n";
      else
        ctx.out << to_string(wd) << "\n";
    });
  }

  // normalizer
  {
    auto* c = sub("normalizer", "class of the normalizer of a descriptor");
    auto arg = std::make_shared<std::string>();
    c->add_option("subgroup", *arg, "subgroup JSON or a path to it")->required();
    c->callback([&ctx, arg] {
      SubgroupClass n = normalizer(subgroup_from_json(load_object_arg(*arg)));
      if (ctx.json_mode)
        ctx.out << subgroup_to_json(n) << "\n";
      else
        ctx.out << to_string(n) << "\n";
    });
  }

  // fuse
  {
    auto* c = sub("fuse", "do two descriptors name the same ambient class?");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    c->add_option("first", *a, "subgroup JSON")->required();
    c->add_option("second", *b, "subgroup JSON")->required();
    c->callback([&ctx, a, b] {
      bool f = fuse(subgroup_from_json(load_object_arg(*a)), subgroup_from_json(load_object_arg(*b)));
      if (ctx.json_mode)
        ctx.out << json{{"fuse", f}}.dump(2) << "\n";
      else
        ctx.out << (f ? "true" : "false") << "\n";
    });
  }

  // count-classes
  {
    auto* c = sub("count-classes", "preimage and fused class counts over the five finite types");
    auto type = std::make_shared<std::string>();
    c->add_option("--type", *type, "one of SU2, A5, Sigma4, A4, D4 (default: all)");
    c->callback([&ctx, type] {
      std::vector<CentralType> list;
      if (type->empty())
        list = {CentralType::SU2, CentralType::A5, CentralType::Sigma4, CentralType::A4, CentralType::D4};
      else
        list = {central_type_from(*type)};
      if (ctx.json_mode) {
        json arr = json::array();
        for (CentralType x : list) arr.push_back(count_json(x));
        ctx.out << (list.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
      } else {
        for (CentralType x : list) {
          json j = count_json(x);
          ctx.out << to_string(x) << ": preimage=" << j["preimage_classes"] << " fused=" << j["fused_classes"]
                  << " orbits=" << j["orbit_sizes"].dump() << "\n";
        }
      }
    });
  }

  // oracle normalizer | oracle fusion
  {
    CLI::App* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    oracle->require_subcommand(1);
    oracle->fallthrough();

    auto* on = oracle->add_subcommand("normalizer", "finite-model normalizer order vs the predicted class");
    on->fallthrough();
    auto level = std::make_shared<long long>(0);
    auto subj = std::make_shared<std::string>();
    on->add_option("--level", *level, "torsion level of the finite model (default: canonical level)");
    on->add_option("--subgroup", *subj, "subgroup JSON or a path to it")->required();
    on->callback([&ctx, level, subj] {
      SubgroupClass k = subgroup_from_json(load_object_arg(*subj));
      long long lvl = *level > 0 ? *level : model::model_level(k);
      model::ModelGroup g(lvl);
      std::vector<long long> h = model::realize(g, k);
      long long measured = model::normalizer_order_parallel(g, h);
      long long predicted = model::predicted_normalizer_order(g, k);
      bool agree = measured == predicted;
      if (ctx.json_mode)
        ctx.out << json{{"level", lvl},
                        {"subgroup_order", static_cast<long long>(h.size())},
                        {"normalizer_order", measured},
                        {"predicted_order", predicted},
                        {"agree", agree}}
                       .dump(2)
                << "\n";
      else
        ctx.out << "level " << lvl << ": subgroup order " << h.size() << ", normalizer order " << measured
                << ", predicted " << predicted << (agree ? " (agree)" : " (DISAGREE)") << "\n";
      if (!agree) ctx.code = 1;
    });

    auto* of = oracle->add_subcommand("fusion", "Haar samples against the torus-intersection law");
    of->fallthrough();
    auto trials = std::make_shared<long long>(10000);
    auto tol_unitary = std::make_shared<double>(1e-9);
    auto serial = std::make_shared<bool>(false);
    of->add_option("--trials", *trials, "number of Haar samples (default 10000)");
    of->add_option("--tol-unitary", *tol_unitary, "unitarity guard (default 1e-9)");
    of->add_flag("--serial", *serial, "run the serial reference kernel");
    of->callback([&ctx, trials, tol_unitary, serial] {
      numeric::FusionSampleReport r = numeric::sample_fusion(
          *trials, static_cast<std::uint64_t>(ctx.seed), *tol_unitary, ctx.tol, !*serial);
      bool pass = r.violations == 0;
      if (ctx.json_mode)
        ctx.out << json{{"trials", r.trials},
                        {"kept", r.kept},
                        {"skipped_near_monomial", r.skipped_near_monomial},
                        {"violations", r.violations},
                        {"min_obstruction", r.min_obstruction},
                        {"max_unitarity_error", r.max_unitarity_error},
                        {"max_pair_identity_error", r.max_pair_identity_error},
                        {"pass", pass}}
                       .dump(2)
                << "\n";
      else
        ctx.out << r.trials << " trials, " << r.kept << " kept, " << r.violations
                << " violations, min obstruction " << r.min_obstruction << "\n";
      if (!pass) ctx.code = 1;
    });
  }

  // validate-object
  {
    auto* c = sub("validate-object", "run the matching validator on a model object");
    auto arg = std::make_shared<std::string>();
    auto margin = std::make_shared<int>(3);
    c->add_option("object", *arg, "object JSON or a path to it")->required();
    c->add_option("--margin", *margin, "torsion safety margin near the window bottom (default 3)");
    c->callback([&ctx, arg, margin] {
      std::string text = load_object_arg(*arg);
      json peek = json::parse(text, nullptr, false);
      if (peek.is_discarded() || !peek.is_object() || !peek.contains("kind") || !peek.at("kind").is_string())
        throw std::invalid_argument("object json: missing kind");
      std::string kind = peek.at("kind").get<std::string>();
      ValidationReport r;
      if (kind == "type1")
        r = validate_type1(type1_from_json(text), *margin);
      else if (kind == "type0")
        r = validate_type0(type0_from_json(text));
      else if (kind == "standard2d")
        r = validate_standard2d(standard2d_from_json(text), *margin);
      else
        throw std::invalid_argument("object json: unknown kind " + kind +
                                    " (zero-dimensional objects are validated by construction)");
      if (ctx.json_mode) {
        ctx.out << r.to_json() << "\n";
      } else {
        ctx.out << to_string(r.verdict) << "\n";
        for (const CheckFailure& f : r.failures)
          ctx.out << "  " << f.condition << " at " << (f.where.empty() ? "-" : f.where) << " degree " << f.degree
                  << ": " << f.detail << "\n";
        for (const std::string& cv : r.caveats) ctx.out << "  caveat: " << cv << "\n";
      }
      if (r.verdict == Verdict::Fail) ctx.code = 1;
    });
  }

  // restrict-easy
  {
    auto* c = sub("restrict-easy", "pull an easy-block object back along the class covering");
    auto arg = std::make_shared<std::string>();
    auto type = std::make_shared<std::string>();
    c->add_option("--type", *type, "one of SU2, A5, Sigma4, A4, D4")->required();
    c->add_option("object", *arg, "vertical-model object JSON or a path to it")->required();
    c->callback([&ctx, arg, type] {
      Type1Object r = restrict_easy_block(type1_from_json(load_object_arg(*arg)), central_type_from(*type));
      if (ctx.json_mode) {
        ctx.out << r.to_json() << "\n";
      } else {
        for (const Type1Point& p : r.points) ctx.out << p.label << "\n";
        ctx.out << r.points.size() << " points\n";
      }
    });
  }

  // enumerate-flags
  {
    auto* c = sub("enumerate-flags", "cofree invariant chains with ring and component data");
    auto amb = std::make_shared<std::string>("tn");
    c->add_option("--ambient", *amb, "tn (torus normalizer) or u2 (default tn)");
    c->callback([&ctx, amb] {
      FlagAmbient a;
      if (*amb == "tn")
        a = FlagAmbient::TorusNormalizer;
      else if (*amb == "u2")
        a = FlagAmbient::UnitaryGroup;
      else
        throw std::invalid_argument("unknown ambient " + *amb + " (expected tn or u2)");
      auto flags = enumerate_flags(Int(ctx.truncation), a);
      if (ctx.json_mode) {
        json arr = json::array();
        for (const FlagData& f : flags) arr.push_back(json::parse(f.to_json()));
        ctx.out << arr.dump(2) << "\n";
      } else {
        for (const FlagData& f : flags) {
          for (size_t i = 0; i < f.chain.size(); ++i) ctx.out << (i ? " < " : "") << to_string(f.chain[i]);
          ctx.out << " : " << f.ring << " " << to_string(f.component) << (f.central ? " central" : "") << "\n";
        }
        ctx.out << flags.size() << " flags\n";
      }
    });
  }

  // diagram
  {
    auto* c = sub("diagram", "SVG or DOT picture of a partition piece");
    auto block = std::make_shared<std::string>("T");
    auto format = std::make_shared<std::string>("svg");
    c->add_option("--block", *block, "partition piece (default T)");
    c->add_option("--format", *format, "svg or dot (default svg)");
    c->callback([&ctx, block, format] {
      if (*format != "svg" && *format != "dot")
        throw std::invalid_argument("unknown format " + *format + " (expected svg or dot)");
      BlockId b = block_from(*block);
      std::string doc =
          b == BlockId::T ? emit_square(ctx.truncation, *format) : emit_hasse(b, ctx.truncation, *format);
      if (ctx.json_mode)
        ctx.out << json{{"block", *block}, {"format", *format}, {"document", doc}}.dump(2) << "\n";
      else
        ctx.out << doc;
    });
  }

  std::vector<const char*> argv;
  argv.push_back("u2model");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {2, std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string(e.what()) + "\n"};
  } catch (const json::exception& e) {
    return {2, std::string(e.what()) + "\n"};
  }
  return {ctx.code, ctx.out.str()};
}

}  // namespace u2
