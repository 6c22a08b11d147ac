#include "u2/model.hpp"

#include <json.hpp>

#include <stdexcept>

namespace u2 {

namespace {

using nlohmann::json;

json j_mat(const RatMat& m) {
  json rows = json::array();
  for (long long i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (long long j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows}, {"cols", m.cols}, {"data", std::move(rows)}};
}

json j_family(const std::vector<RatMat>& fam) {
  json out = json::array();
  for (const RatMat& m : fam) out.push_back(j_mat(m));
  return out;
}

json j_families(const std::vector<std::vector<RatMat>>& fams) {
  json out = json::array();
  for (const auto& f : fams) out.push_back(j_family(f));
  return out;
}

json j_window(const Window& w) { return json::array({w.lo, w.hi}); }

json j_vs(const GradedVS& v) {
  return json{{"window", j_window(v.w)},
              {"dims", v.dims},
              {"group", to_string(v.group)},
              {"action", j_families(v.action)}};
}

json j_cmodule(const CModule& m) {
  return json{{"window", j_window(m.w)}, {"dims", m.dims}, {"c", j_family(m.c)}};
}

json j_parity(const ParityPair& p) { return json::array({p.even, p.odd}); }

// --- parsing ---

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("model json: " + what); }

json parse_root(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("not valid JSON");
  if (!j.is_object()) bad("top level must be an object");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field ") + key);
  return *it;
}

long long p_count(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(key) + " must be a nonnegative integer");
  return v.get<long long>();
}

Rat p_rat(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (!v.is_string()) bad("matrix entries must be integers or \"p/q\" strings");
  try {
    return Rat(v.get<std::string>());
  } catch (const std::exception&) {
    bad("cannot parse rational " + v.get<std::string>());
  }
}

RatMat p_mat(const json& j) {
  if (!j.is_object()) bad("matrix must be an object");
  RatMat m(p_count(j, "rows"), p_count(j, "cols"));
  const json& data = field(j, "data");
  if (!data.is_array() || static_cast<long long>(data.size()) != m.rows) bad("matrix data must hold one array per row");
  for (long long i = 0; i < m.rows; ++i) {
    const json& row = data[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != m.cols) bad("matrix row of the wrong length");
    for (long long jx = 0; jx < m.cols; ++jx) m.at(i, jx) = p_rat(row[static_cast<size_t>(jx)]);
  }
  return m;
}

std::vector<RatMat> p_family(const json& j) {
  if (!j.is_array()) bad("matrix family must be an array");
  std::vector<RatMat> out;
  for (const json& e : j) out.push_back(p_mat(e));
  return out;
}

std::vector<std::vector<RatMat>> p_families(const json& j) {
  if (!j.is_array()) bad("generator list must be an array");
  std::vector<std::vector<RatMat>> out;
  for (const json& e : j) out.push_back(p_family(e));
  return out;
}

Window p_window(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) bad("window must be [lo, hi]");
  Window w{j[0].get<int>(), j[1].get<int>()};
  if (w.size() <= 0) bad("window must be nonempty");
  return w;
}

std::vector<long long> p_dims(const json& j) {
  if (!j.is_array()) bad("dims must be an array");
  std::vector<long long> out;
  for (const json& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) bad("dims entries must be nonnegative integers");
    out.push_back(e.get<long long>());
  }
  return out;
}

ComponentGroupKind p_group(const json& j) {
  if (!j.is_string()) bad("group must be a string");
  std::string s = j.get<std::string>();
  for (ComponentGroupKind g : {ComponentGroupKind::Trivial, ComponentGroupKind::C2, ComponentGroupKind::C3,
                               ComponentGroupKind::C2xC2, ComponentGroupKind::Sigma3})
    if (to_string(g) == s) return g;
  bad("unknown group " + s);
}

GradedVS p_vs(const json& j) {
  if (!j.is_object()) bad("graded space must be an object");
  GradedVS v;
  v.w = p_window(field(j, "window"));
  v.dims = p_dims(field(j, "dims"));
  v.group = p_group(field(j, "group"));
  v.action = p_families(field(j, "action"));
  return v;
}

CModule p_cmodule(const json& j) {
  if (!j.is_object()) bad("module must be an object");
  CModule m;
  m.w = p_window(field(j, "window"));
  m.dims = p_dims(field(j, "dims"));
  m.c = p_family(field(j, "c"));
  return m;
}

ParityPair p_parity(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) bad("parity data must be [even, odd]");
  return ParityPair{j[0].get<long long>(), j[1].get<long long>()};
}

std::string p_label(const json& j) {
  if (!j.is_string()) bad("label must be a string");
  return j.get<std::string>();
}

void expect_kind(const json& j, const char* kind) {
  if (!field(j, "kind").is_string() || field(j, "kind").get<std::string>() != kind)
    bad(std::string("expected kind ") + kind);
}

}  // namespace

std::string GradedVS::to_json() const { return j_vs(*this).dump(2); }

std::string CModule::to_json() const { return j_cmodule(*this).dump(2); }

std::string ValidationReport::to_json() const {
  json j;
  j["verdict"] = to_string(verdict);
  j["failures"] = json::array();
  for (const CheckFailure& f : failures)
    j["failures"].push_back(json{{"condition", f.condition}, {"where", f.where}, {"degree", f.degree}, {"detail", f.detail}});
  j["caveats"] = caveats;
  return j.dump(2);
}

std::string Type1Object::to_json() const {
  json j;
  j["kind"] = "type1";
  j["window"] = j_window(w);
  j["global"] = j_vs(V);
  j["points"] = json::array();
  for (const Type1Point& p : points)
    j["points"].push_back(json{{"label", p.label},
                               {"module", j_cmodule(p.N)},
                               {"group", to_string(p.wk)},
                               {"gens_on_module", j_families(p.gens_on_N)},
                               {"gens_on_global", j_families(p.gens_on_V)},
                               {"structure_map", j_family(p.beta)}});
  return j.dump(2);
}

std::string Type0Object::to_json() const {
  json j;
  j["kind"] = "type0";
  j["window"] = j_window(w);
  j["global"] = j_vs(FH);
  j["points"] = json::array();
  for (const Type0Point& p : points)
    j["points"].push_back(json{{"label", p.label},
                               {"stalk", j_vs(p.F)},
                               {"gens_on_global", j_families(p.gens_on_FH)},
                               {"spread", j_family(p.spread)},
                               {"exceptional", p.exceptional}});
  return j.dump(2);
}

std::string Standard2DObject::to_json() const {
  json j;
  j["kind"] = "standard2d";
  j["window"] = j_window(w);
  j["labels"] = labels;
  j["base"] = json::array();
  for (const CModule& m : base) j["base"].push_back(j_cmodule(m));
  j["tail"] = j_cmodule(tail);
  j["z_corner"] = json::array();
  for (const ParityPair& p : z_corner) j["z_corner"].push_back(j_parity(p));
  j["t_corner"] = j_cmodule(t_corner);
  j["g_corner"] = j_parity(g_corner);
  j["phi_z"] = json::array();
  for (const GradedVS& v : phi_z) j["phi_z"].push_back(j_vs(v));
  j["phi_t"] = j_cmodule(phi_t);
  j["phi_g"] = j_vs(phi_g);
  return j.dump(2);
}

std::string PolyModule::to_json() const {
  json j;
  j["window"] = j_window(w);
  j["dims"] = dims;
  j["ops"] = j_families(ops);
  j["group"] = to_string(group);
  j["action"] = j_families(action);
  return j.dump(2);
}

std::string ZeroDimObject::to_json() const {
  json j;
  j["kind"] = "zerodim";
  j["subject"] = to_string(subject);
  j["weyl"] = json{{"rank", weyl_data.identity_rank},
                   {"ring", ring_string(weyl_data)},
                   {"component", to_string(weyl_data.component)}};
  j["module"] = json::parse(M.to_json());
  return j.dump(2);
}

Type1Object type1_from_json(const std::string& text) {
  json j = parse_root(text);
  expect_kind(j, "type1");
  Type1Object x;
  x.w = p_window(field(j, "window"));
  x.V = p_vs(field(j, "global"));
  const json& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  for (const json& e : pts) {
    if (!e.is_object()) bad("point must be an object");
    Type1Point p;
    p.label = p_label(field(e, "label"));
    p.N = p_cmodule(field(e, "module"));
    p.wk = p_group(field(e, "group"));
    p.gens_on_N = p_families(field(e, "gens_on_module"));
    p.gens_on_V = p_families(field(e, "gens_on_global"));
    p.beta = p_family(field(e, "structure_map"));
    x.points.push_back(std::move(p));
  }
  return x;
}

Type0Object type0_from_json(const std::string& text) {
  json j = parse_root(text);
  expect_kind(j, "type0");
  Type0Object x;
  x.w = p_window(field(j, "window"));
  x.FH = p_vs(field(j, "global"));
  const json& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  for (const json& e : pts) {
    if (!e.is_object()) bad("point must be an object");
    Type0Point p;
    p.label = p_label(field(e, "label"));
    p.F = p_vs(field(e, "stalk"));
    p.gens_on_FH = p_families(field(e, "gens_on_global"));
    p.spread = p_family(field(e, "spread"));
    const json& ex = field(e, "exceptional");
    if (!ex.is_boolean()) bad("exceptional must be a boolean");
    p.exceptional = ex.get<bool>();
    x.points.push_back(std::move(p));
  }
  return x;
}

Standard2DObject standard2d_from_json(const std::string& text) {
  json j = parse_root(text);
  expect_kind(j, "standard2d");
  Standard2DObject x;
  x.w = p_window(field(j, "window"));
  const json& labels = field(j, "labels");
  if (!labels.is_array()) bad("labels must be an array");
  for (const json& e : labels) x.labels.push_back(p_label(e));
  const json& base = field(j, "base");
  if (!base.is_array()) bad("base must be an array");
  for (const json& e : base) x.base.push_back(p_cmodule(e));
  x.tail = p_cmodule(field(j, "tail"));
  const json& zc = field(j, "z_corner");
  if (!zc.is_array()) bad("z_corner must be an array");
  for (const json& e : zc) x.z_corner.push_back(p_parity(e));
  x.t_corner = p_cmodule(field(j, "t_corner"));
  x.g_corner = p_parity(field(j, "g_corner"));
  const json& pz = field(j, "phi_z");
  if (!pz.is_array()) bad("phi_z must be an array");
  for (const json& e : pz) x.phi_z.push_back(p_vs(e));
  x.phi_t = p_cmodule(field(j, "phi_t"));
  x.phi_g = p_vs(field(j, "phi_g"));
  return x;
}

PolyModule poly_module_from_json(const std::string& text) {
  json j = parse_root(text);
  PolyModule m;
  m.w = p_window(field(j, "window"));
  m.dims = p_dims(field(j, "dims"));
  m.ops = p_families(field(j, "ops"));
  m.group = p_group(field(j, "group"));
  m.action = p_families(field(j, "action"));
  return m;
}

}  // namespace u2
