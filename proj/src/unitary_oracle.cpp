#include "u2/unitary_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace u2 {
namespace numeric {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

C herm_dot(const C col_a[2], const C col_b[2]) {
  return std::conj(col_a[0]) * col_b[0] + std::conj(col_a[1]) * col_b[1];
}

} // namespace

Mat2 haar_unitary(std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Two complex Gaussian columns, orthonormalized; the invariance of the
  // Gaussian measure under left multiplication makes the result Haar.
  C v0[2], v1[2];
  for (auto* v : {v0, v1})
    for (int r = 0; r < 2; ++r) v[r] = C(gauss(rng), gauss(rng));
  double n0 = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
  for (int r = 0; r < 2; ++r) v0[r] /= n0;
  C proj = herm_dot(v0, v1);
  for (int r = 0; r < 2; ++r) v1[r] -= proj * v0[r];
  double n1 = std::sqrt(std::norm(v1[0]) + std::norm(v1[1]));
  for (int r = 0; r < 2; ++r) v1[r] /= n1;
  Mat2 g;
  for (int r = 0; r < 2; ++r) {
    g.m[0][r] = v0[r];
    g.m[1][r] = v1[r];
  }
  return g;
}

double unitarity_error(const Mat2& g) {
  double worst = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      C e = herm_dot(g.m[i], g.m[j]) - (i == j ? C(1, 0) : C(0, 0));
      worst = std::max(worst, std::abs(e));
    }
  return worst;
}

double fusing_obstruction(const Mat2& g) {
  // h = g diag(1,-1) g* is Hermitian with h01 = conj(h10), so the
  // off-diagonal size is 2|h01|.
  C h01 = g.m[0][0] * std::conj(g.m[0][1]) - g.m[1][0] * std::conj(g.m[1][1]);
  return 2.0 * std::abs(h01);
}

double pair_identity_error(const Mat2& g) {
  C a = g.m[0][0] * std::conj(g.m[0][1]);
  C b = g.m[1][0] * std::conj(g.m[1][1]);
  return std::abs(a + b);
}

double monomial_distance_sq(const Mat2& g) {
  double off = std::norm(g.m[1][0]) + std::norm(g.m[0][1]);
  double diag = std::norm(g.m[0][0]) + std::norm(g.m[1][1]);
  return std::min(off, diag);
}

FusionSampleReport sample_fusion(long long trials, std::uint64_t seed, double tol_unitary,
                                 double tol_fusion, bool parallel) {
  if (trials < 0) throw std::invalid_argument("sample_fusion: negative trial count");
  FusionSampleReport rep;
  rep.trials = trials;
  rep.min_obstruction = std::numeric_limits<double>::infinity();

  long long kept = 0, skipped = 0, violations = 0;
  double min_obs = std::numeric_limits<double>::infinity();
  double max_uerr = 0, max_pair = 0;

#pragma omp parallel for schedule(static) reduction(+ : kept, skipped, violations) \
    reduction(min : min_obs) reduction(max : max_uerr, max_pair) if (parallel)
  for (long long t = 0; t < trials; ++t) {
    Mat2 g = haar_unitary(splitmix64(seed ^ static_cast<std::uint64_t>(t)));
    max_uerr = std::max(max_uerr, unitarity_error(g));
    max_pair = std::max(max_pair, pair_identity_error(g));
    if (monomial_distance_sq(g) < tol_fusion) {
      ++skipped;
      continue;
    }
    ++kept;
    double obs = fusing_obstruction(g);
    min_obs = std::min(min_obs, obs);
    if (obs <= tol_fusion) ++violations;
  }

  rep.kept = kept;
  rep.skipped_near_monomial = skipped;
  rep.violations = violations;
  rep.min_obstruction = kept ? min_obs : 0.0;
  rep.max_unitarity_error = max_uerr;
  rep.max_pair_identity_error = max_pair;
  if (rep.max_unitarity_error > tol_unitary)
    throw std::runtime_error("sample_fusion: orthonormalization lost precision");
  return rep;
}

} // namespace numeric
} // namespace u2
