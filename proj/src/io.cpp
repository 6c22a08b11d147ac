#include "u2/io.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>

namespace u2 {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("descriptor json: " + what); }

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("unparseable input");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
  return j.at(key);
}

json j_int(const Int& v) { return json(v.str()); }

Int p_int(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad(std::string(what) + " is not an integer");
    }
  }
  bad(std::string(what) + " must be an integer");
}

json j_ext(const ExtInt& e) {
  if (!e.finite) return json("inf");
  if (e.v >= std::numeric_limits<long long>::min() && e.v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(e.v));
  return j_int(e.v);
}

ExtInt p_ext(const json& j, const char* what) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtInt::inf();
  return ExtInt::of(p_int(j, what));
}

json lattice_json(const DualLattice& l) {
  json basis = json::array();
  for (const Vec2& v : l.basis()) basis.push_back({j_int(v.a), j_int(v.b)});
  return json{{"rank", l.rank()}, {"basis", basis}};
}

DualLattice lattice_from(const json& j) {
  const json& basis = field(j, "basis");
  if (!basis.is_array()) bad("basis must be an array of [a, b] pairs");
  std::vector<Vec2> gens;
  for (const json& row : basis) {
    if (!row.is_array() || row.size() != 2) bad("basis rows must be [a, b] pairs");
    gens.push_back(Vec2{p_int(row[0], "basis entry"), p_int(row[1], "basis entry")});
  }
  DualLattice l = canonicalize(gens);
  if (j.contains("rank")) {
    const json& r = field(j, "rank");
    if (!r.is_number_integer() || r.get<int>() != l.rank()) bad("declared rank disagrees with the basis");
  }
  return l;
}

}  // namespace

std::string lattice_to_json(const DualLattice& l) { return lattice_json(l).dump(2); }

DualLattice lattice_from_json(const std::string& text) { return lattice_from(parse(text)); }

std::string lattice_class_to_json(const LatticeClass& c) {
  json j{{"family", family_name(c.family)}};
  switch (c.family) {
    case LatticeFamily::Zero:
    case LatticeFamily::NonInvariant:
      break;
    case LatticeFamily::EdgePlus:
      j["m"] = j_int(c.m);
      break;
    case LatticeFamily::EdgeMinus:
      j["n"] = j_int(c.n);
      break;
    default:
      j["m"] = j_int(c.m);
      j["n"] = j_int(c.n);
  }
  return j.dump(2);
}

std::string subgroup_to_json(const SubgroupClass& k) {
  json j;
  if (const Toral* t = std::get_if<Toral>(&k)) {
    j["kind"] = "toral";
    j["lattice"] = lattice_json(t->dagger);
  } else if (const Full* f = std::get_if<Full>(&k)) {
    j["kind"] = "full";
    j["m"] = j_ext(f->m);
    j["n"] = j_ext(f->n);
    j["lambda"] = to_string(f->lambda);
  } else if (const CentralProduct* c = std::get_if<CentralProduct>(&k)) {
    j["kind"] = "central_product";
    j["type"] = to_string(c->x);
    j["s"] = j_ext(c->s);
    j["variant"] = c->variant;
  } else {
    j["kind"] = "ambient";
  }
  return j.dump(2);
}

SubgroupClass subgroup_from_json(const std::string& text) {
  json j = parse(text);
  std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "toral") return toral(lattice_from(field(j, "lattice")));
  if (kind == "full") {
    const json& l = field(j, "lambda");
    if (!l.is_string()) bad("lambda must be one of \"1s\", \"1ns\", \"2\"");
    std::string s = l.get<std::string>();
    FullLambda lambda;
    if (s == "1s")
      lambda = FullLambda::Split;
    else if (s == "1ns")
      lambda = FullLambda::NonSplit;
    else if (s == "2")
      lambda = FullLambda::TypeTwo;
    else
      bad("lambda must be one of \"1s\", \"1ns\", \"2\"");
    return full(p_ext(field(j, "m"), "m"), p_ext(field(j, "n"), "n"), lambda);
  }
  if (kind == "central_product") {
    const json& t = field(j, "type");
    if (!t.is_string()) bad("type must be one of SU2, A5, Sigma4, A4, D4");
    std::string s = t.get<std::string>();
    CentralType x;
    if (s == "SU2")
      x = CentralType::SU2;
    else if (s == "A5")
      x = CentralType::A5;
    else if (s == "Sigma4")
      x = CentralType::Sigma4;
    else if (s == "A4")
      x = CentralType::A4;
    else if (s == "D4")
      x = CentralType::D4;
    else
      bad("type must be one of SU2, A5, Sigma4, A4, D4");
    int variant = 0;
    if (j.contains("variant")) {
      const json& v = j.at("variant");
      if (!v.is_number_integer() || v.get<int>() < 0) bad("variant must be a nonnegative integer");
      variant = v.get<int>();
    }
    return central_product(x, p_ext(field(j, "s"), "s"), variant);
  }
  if (kind == "ambient") return ambient();
  bad("kind must be one of toral, full, central_product, ambient");
}

}  // namespace u2
