#pragma once

#include <complex>
#include <cstdint>

namespace u2 {
namespace numeric {

using C = std::complex<double>;

// Column-major 2x2 complex matrix, entries m[col][row].
struct Mat2 {
  C m[2][2];
};

Mat2 haar_unitary(std::uint64_t trial_seed);

double unitarity_error(const Mat2& g); // max entry of |g* g - I|

// Off-diagonal size of g diag(1,-1) g*; zero exactly when conjugation by
// g keeps some nonscalar diagonal matrix diagonal, which forces g into
// the monomial subgroup (diagonal or antidiagonal).
double fusing_obstruction(const Mat2& g);

// |g00 conj(g10) + g01 conj(g11)|: vanishes identically for unitary g,
// which is the algebraic heart of the statement above.
double pair_identity_error(const Mat2& g);

// Distance-squared to the monomial subgroup: smaller of the two entry
// pairs that a diagonal or antidiagonal matrix would kill.
double monomial_distance_sq(const Mat2& g);

struct FusionSampleReport {
  long long trials = 0;
  long long kept = 0;              // samples clear of the monomial subgroup
  long long skipped_near_monomial = 0;
  long long violations = 0;        // kept samples whose obstruction still vanished
  double min_obstruction = 0;      // over kept samples
  double max_unitarity_error = 0;
  double max_pair_identity_error = 0;
};

// Draws Haar-distributed unitaries (each trial independently seeded, so
// the parallel schedule cannot change the outcome) and checks that no
// sample off the monomial subgroup admits a nonscalar fusing diagonal.
FusionSampleReport sample_fusion(long long trials, std::uint64_t seed, double tol_unitary,
                                 double tol_fusion, bool parallel);

} // namespace numeric
} // namespace u2
