#pragma once

#include "u2/ratmat.hpp"
#include "u2/weyl.hpp"

#include <string>
#include <vector>

namespace u2 {

// Closed degree range [lo, hi]. Every module in one object lives on the
// same window, represented degreewise; d indexes as d - lo.
struct Window {
  int lo = 0;
  int hi = -1;

  int size() const { return hi - lo + 1; }
  bool contains(int d) const { return d >= lo && d <= hi; }
  int idx(int d) const { return d - lo; }

  bool operator==(const Window&) const = default;
};

int group_generator_count(ComponentGroupKind g);

// Checks the defining relations of g on one square matrix per degree per
// generator (degree-preserving actions). Returns "" when satisfied, else a
// description of the first violated relation.
std::string group_relation_error(ComponentGroupKind g, const std::vector<std::vector<RatMat>>& gens,
                                 const std::vector<long long>& dims);

// Graded rational vector space on a window, with an optional action of a
// finite component group (one invertible matrix per generator per degree).
struct GradedVS {
  Window w;
  std::vector<long long> dims;
  ComponentGroupKind group = ComponentGroupKind::Trivial;
  std::vector<std::vector<RatMat>> action;  // [generator][degree index]

  long long dim(int d) const { return w.contains(d) ? dims[static_cast<size_t>(w.idx(d))] : 0; }
  std::string to_json() const;
};

GradedVS vs_point(const Window& w, int degree, long long dim);

// Interval summand of a graded Q[c]-module: generated in degree top, dying
// after len steps of c; free means it is still alive at the window bottom
// (indistinguishable from an actual free summand at this truncation, and
// treated as free throughout). For free bars len is the visible length.
struct Bar {
  int top = 0;
  int len = 1;
  bool free_ = false;

  bool operator==(const Bar&) const = default;
};

// Graded Q[c]-module on a window, c of degree -2: per-degree dims and the
// per-degree matrices of c. c[i] maps degree lo+i to degree lo+i-2 and is
// only meaningful for i >= 2.
struct CModule {
  Window w;
  std::vector<long long> dims;
  std::vector<RatMat> c;

  long long dim(int d) const { return w.contains(d) ? dims[static_cast<size_t>(w.idx(d))] : 0; }

  // Canonical interval decomposition (sorted; multiplicities preserved).
  // Throws std::invalid_argument on malformed shapes. The bars always
  // reassemble to the degreewise dims; that identity is rechecked and a
  // violation throws std::logic_error.
  std::vector<Bar> decompose() const;

  bool operator==(const CModule&) const = default;
  std::string to_json() const;
};

// Module in canonical bar coordinates: degree-d basis vectors are pairs
// (bar, c-power), bars in the order given.
CModule module_from_bars(const Window& w, const std::vector<Bar>& bars);

std::vector<Bar> sorted_bars(std::vector<Bar> bars);

// Free generators of m as a graded vector space: one dimension in each
// free bar's top degree.
GradedVS free_part_vs(const CModule& m);

// Degreewise dimension of the c-inverted module, constant per parity:
// {even count, odd count} of free bars.
struct ParityPair {
  long long even = 0;
  long long odd = 0;

  bool operator==(const ParityPair&) const = default;
};

ParityPair inverted_dims(const CModule& m);

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct CheckFailure {
  std::string condition;
  std::string where;  // point label or corner name; "" for global conditions
  int degree = 0;
  std::string detail;
};

// Fail beats Inconclusive: verdict is Fail when any definite failure is
// recorded, Inconclusive when only caveats are, Pass otherwise.
struct ValidationReport {
  Verdict verdict = Verdict::Pass;
  std::vector<CheckFailure> failures;
  std::vector<std::string> caveats;

  std::string to_json() const;
};

// One point of the vertical model: a Q[c]-module with its component group
// acting on it and, through the constant map to the global group, on V.
struct Type1Point {
  std::string label;
  CModule N;
  ComponentGroupKind wk = ComponentGroupKind::Trivial;
  std::vector<std::vector<RatMat>> gens_on_N;  // [generator][degree index], square per degree
  std::vector<std::vector<RatMat>> gens_on_V;  // images of the same generators acting on V
  std::vector<RatMat> beta;                    // [degree index]: inverted-column coordinates <- N
};

// Vertical-direction model object: finitely many points carrying
// Q[c]-modules, one global graded space V, and per-point structure maps
// into the c-inverted column on V. The c-inverted column in degree d has
// one coordinate block for each degree of V of the same parity, ascending;
// c acts as the identity in these coordinates.
struct Type1Object {
  Window w;
  GradedVS V;
  std::vector<Type1Point> points;

  std::string to_json() const;
};

long long inverted_column_dim(const GradedVS& v, int parity);
RatMat inverted_column_action(const GradedVS& v, const std::vector<RatMat>& gen, int parity);

ValidationReport validate_type1(const Type1Object& x, int margin = 3);

// One stalk of the horizontal model.
struct Type0Point {
  std::string label;
  GradedVS F;                                   // carries this point's component group and action
  std::vector<std::vector<RatMat>> gens_on_FH;  // images of the point's generators on the global stalk
  std::vector<RatMat> spread;                   // [degree index]: F <- FH
  bool exceptional = false;                     // allowed to miss the spreading of a kernel element
};

// Horizontal-direction model object: a global stalk spreading into the
// pointwise stalks, injectively once the finitely many exceptional points
// are discarded.
struct Type0Object {
  Window w;
  GradedVS FH;
  std::vector<Type0Point> points;

  std::string to_json() const;
};

ValidationReport validate_type0(const Type0Object& x);

// Two-direction diagram on a finite point set plus one generic slot, with
// stored data for all four corners and the three extension witnesses.
// Corner conventions at this truncation: inverting the vertical direction
// replaces each slot by its c-inverted parity data; inverting the
// horizontal direction keeps only the generic slot.
struct Standard2DObject {
  Window w;
  std::vector<std::string> labels;   // finite point set
  std::vector<CModule> base;         // bottom corner, one slot per label
  CModule tail;                      // bottom corner, generic slot
  std::vector<ParityPair> z_corner;  // vertical corner, labels then generic slot
  CModule t_corner;                  // horizontal corner
  ParityPair g_corner;               // top corner
  std::vector<GradedVS> phi_z;       // witnesses for the vertical corner, labels then generic slot
  CModule phi_t;                     // witness for the horizontal corner
  GradedVS phi_g;                    // witness for the top corner

  std::string to_json() const;
};

// Builds the diagram of an extended object from its witnesses: base slots
// are free on the phi_z generators plus the given torsion bars, the
// generic slot is phi_t, corners are computed. Throws when the witnesses
// are inconsistent (phi_g and the generic phi_z slot must match the free
// parity data of phi_t).
Standard2DObject make_standard2d(const Window& w, const std::vector<std::string>& labels,
                                 const std::vector<GradedVS>& phi_z, const CModule& phi_t,
                                 const GradedVS& phi_g,
                                 const std::vector<std::vector<Bar>>& base_torsion);

ValidationReport validate_standard2d(const Standard2DObject& x, int margin = 3);

// Graded module over a polynomial ring on weyl(H).identity_rank codegree-2
// generators, with the component group acting compatibly with the twist.
struct PolyModule {
  Window w;
  std::vector<long long> dims;
  std::vector<std::vector<RatMat>> ops;  // [ring generator][degree index], degree -2 each
  ComponentGroupKind group = ComponentGroupKind::Trivial;
  std::vector<std::vector<RatMat>> action;

  std::string to_json() const;
};

struct ZeroDimObject {
  SubgroupClass subject;
  WeylData weyl_data;
  PolyModule M;

  std::string to_json() const;
};

// Checked constructor for the isolated-class objects: requires a toral
// identity component (polynomial ring on codegree-2 generators), the
// component group and twist prescribed by weyl(H), commuting operators,
// and every element visibly killed by the augmentation ideal inside the
// window. Violations throw std::invalid_argument.
ZeroDimObject zero_dim_object(const SubgroupClass& H, const PolyModule& M);

// Degreewise map of Type1 objects over a shared point set: one matrix per
// point per degree plus one on V. Must commute with c and beta and be
// equivariant; kernel/cokernel/direct_sum reject anything else.
struct Type1Morphism {
  std::vector<std::vector<RatMat>> fN;  // [point][degree index]
  std::vector<RatMat> fV;
};

std::string morphism_error(const Type1Morphism& f, const Type1Object& x, const Type1Object& y);

Type1Morphism identity_morphism(const Type1Object& x);
Type1Morphism zero_morphism(const Type1Object& x, const Type1Object& y);

struct Type1Sub {
  Type1Object object;
  Type1Morphism embed;  // kernel: object -> x
};

struct Type1Quot {
  Type1Object object;
  Type1Morphism project;  // cokernel: y -> object
};

Type1Sub kernel(const Type1Morphism& f, const Type1Object& x, const Type1Object& y);
Type1Quot cokernel(const Type1Morphism& f, const Type1Object& x, const Type1Object& y);
Type1Object direct_sum(const Type1Object& x, const Type1Object& y);

// Pullback of an easy-block object along the class-space covering: the
// point labeled "c<i>" (an orbit of classes) is repeated once per class in
// its orbit, and all component-group actions are forgotten.
Type1Object restrict_easy_block(const Type1Object& x, CentralType t);

// Parsers for the JSON emitted by the to_json methods. Malformed input
// throws std::invalid_argument.
Type1Object type1_from_json(const std::string& text);
Type0Object type0_from_json(const std::string& text);
Standard2DObject standard2d_from_json(const std::string& text);
PolyModule poly_module_from_json(const std::string& text);

}  // namespace u2
