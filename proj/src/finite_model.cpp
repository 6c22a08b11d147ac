#include "u2/finite_model.hpp"

#include "u2/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace u2 {
namespace model {

namespace {

long long mod(long long a, long long k) {
  long long r = a % k;
  return r < 0 ? r + k : r;
}

long long ll(const Int& v) { return v.convert_to<long long>(); }

} // namespace

ModelGroup::ModelGroup(long long level) : k(level) {
  if (level < 1) throw std::invalid_argument("ModelGroup: level must be positive");
}

long long ModelGroup::encode(long long a, long long b, int e) const {
  return ((mod(a, k) * k + mod(b, k)) << 1) | e;
}

long long ModelGroup::mul(long long x, long long y) const {
  long long a1 = (x >> 1) / k, b1 = (x >> 1) % k;
  long long a2 = (y >> 1) / k, b2 = (y >> 1) % k;
  int e1 = int(x & 1), e2 = int(y & 1);
  if (e1) std::swap(a2, b2);
  return encode(a1 + a2, b1 + b2, e1 ^ e2);
}

long long ModelGroup::inv(long long x) const {
  long long a = (x >> 1) / k, b = (x >> 1) % k;
  int e = int(x & 1);
  if (e) return encode(-b, -a, 1);
  return encode(-a, -b, 0);
}

long long model_level(const SubgroupClass& K) {
  if (const auto* t = std::get_if<Toral>(&K)) {
    const DualLattice& L = t->dagger;
    if (L.rank() == 2) {
      // second Smith divisor of the basis = exponent of the dual group
      Int p = L.basis()[0].a, q = L.basis()[0].b, r = L.basis()[1].b;
      Int d1 = gcd(p, gcd(q, r));
      return 2 * ll(p * r / d1);
    }
    Int biggest = 1;
    for (const Vec2& v : L.basis()) biggest = std::max(biggest, std::max(abs(v.a), abs(v.b)));
    return 8 * ll(biggest);
  }
  if (const auto* f = std::get_if<Full>(&K)) {
    Int m = f->m.finite ? f->m.v : 1;
    Int n = f->n.finite ? f->n.v : 1;
    return 8 * ll(lcm(m, n));
  }
  throw std::invalid_argument("model_level: descriptor has no monomial realization");
}

std::vector<long long> realize(const ModelGroup& G, const SubgroupClass& K) {
  const long long k = G.k;

  DualLattice L;
  bool with_swap_coset = false;
  long long shift_a = 0;

  if (const auto* t = std::get_if<Toral>(&K)) {
    L = t->dagger;
  } else if (const auto* f = std::get_if<Full>(&K)) {
    if (!is_valid(K)) throw std::invalid_argument("realize: invalid descriptor");
    with_swap_coset = true;
    if (f->m.finite && f->n.finite)
      L = f->lambda == FullLambda::TypeTwo ? make_lambda(2, f->m.v, f->n.v)
                                           : make_lambda(1, f->m.v, f->n.v);
    else if (f->m.finite)
      L = make_edge_plus(f->m.v);
    else if (f->n.finite)
      L = make_edge_minus(f->n.v);
    if (f->lambda == FullLambda::NonSplit) {
      long long two_m = 2 * ll(f->m.v);
      if (k % two_m != 0)
        throw std::invalid_argument("realize: level misses the non-split shift");
      shift_a = k / two_m;
    }
  } else {
    throw std::invalid_argument("realize: descriptor has no monomial realization");
  }

  std::vector<long long> rows_a, rows_b;
  for (const Vec2& v : L.basis()) {
    rows_a.push_back(ll(mod(ll(v.a % k), k)));
    rows_b.push_back(ll(mod(ll(v.b % k), k)));
  }

  std::vector<long long> out;
  for (long long a = 0; a < k; ++a)
    for (long long b = 0; b < k; ++b) {
      bool in = true;
      for (size_t i = 0; i < rows_a.size() && in; ++i)
        in = (rows_a[i] * a + rows_b[i] * b) % k == 0;
      if (!in) continue;
      out.push_back(G.encode(a, b, 0));
      if (with_swap_coset) out.push_back(G.encode(a + shift_a, b, 1));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> closure(const ModelGroup& G, const std::vector<long long>& gens) {
  std::vector<unsigned char> seen(size_t(G.size()), 0);
  std::vector<long long> frontier{0}, out{0};
  seen[0] = 1;
  for (long long g : gens)
    if (g < 0 || g >= G.size()) throw std::invalid_argument("closure: id outside the model");
  while (!frontier.empty()) {
    long long x = frontier.back();
    frontier.pop_back();
    for (long long g : gens) {
      long long y = G.mul(x, g);
      if (seen[size_t(y)]) continue;
      seen[size_t(y)] = 1;
      frontier.push_back(y);
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<unsigned char> membership(const ModelGroup& G, const std::vector<long long>& H) {
  std::vector<unsigned char> in(size_t(G.size()), 0);
  for (long long h : H) in[size_t(h)] = 1;
  return in;
}

bool normalizes(const ModelGroup& G, const std::vector<long long>& H,
                const std::vector<unsigned char>& in, long long g) {
  long long gi = G.inv(g);
  for (long long h : H)
    if (!in[size_t(G.mul(G.mul(g, h), gi))]) return false;
  return true;
}

} // namespace

long long normalizer_order_serial(const ModelGroup& G, const std::vector<long long>& H) {
  std::vector<unsigned char> in = membership(G, H);
  long long count = 0;
  for (long long g = 0; g < G.size(); ++g)
    if (normalizes(G, H, in, g)) ++count;
  return count;
}

long long normalizer_order_parallel(const ModelGroup& G, const std::vector<long long>& H) {
  std::vector<unsigned char> in = membership(G, H);
  long long count = 0;
  const long long n = G.size();
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long g = 0; g < n; ++g)
    if (normalizes(G, H, in, g)) ++count;
  return count;
}

long long predicted_normalizer_order(const ModelGroup& G, const SubgroupClass& K) {
  if (const auto* f = std::get_if<Full>(&K)) {
    if (f->n == ExtInt::of(1))
      throw std::invalid_argument(
          "predicted_normalizer_order: abelian column normalizers leave the monomial subgroup");
  }
  if (!std::holds_alternative<Toral>(K) && !std::holds_alternative<Full>(K))
    throw std::invalid_argument("predicted_normalizer_order: descriptor not monomial");

  SubgroupClass N = normalizer(K);
  if (std::holds_alternative<Ambient>(N)) return G.size();
  if (std::holds_alternative<CentralProduct>(N))
    throw std::invalid_argument("predicted_normalizer_order: normalizer not monomial");
  return (long long)realize(G, N).size();
}

} // namespace model
} // namespace u2
