#pragma once

#include <vector>

namespace tdom {

// Point at which the expected one-round changes are evaluated: z[j] is the
// fraction of vertices whose bucket has exactly j paired points.
struct DriftInput {
  int d = 0;
  std::vector<double> z;  // size d
};

// Unpaired-point mass in classes of degree >= k: sum_{i=k}^{d-1} (d-i)*z[i].
double s_mass(const DriftInput& in, int k);

// Expected one-round change of each class fraction (entries 0..d-1) plus the
// set-growth rate (entry d). Compositional form: the per-branch effects are
// combined with their branch probabilities exactly as derived, which leaves
// removable factors of 1/s_1 and 1/(1 - r^{d-1}) in intermediate terms
// (r = s_1/s_0). The s_1 = 0 line is handled by taking the algebraic limit of
// those terms; the evaluator is otherwise singular where z_0 -> 0 drives
// r -> 1. Throws std::domain_error when s_0 <= 0 and std::invalid_argument on
// malformed input.
std::vector<double> drift_raw(const DriftInput& in);

// Identical values in expanded form: every term is a polynomial in the z's,
// powers of r, and 1/s_0, so the only singularities are at s_0 = 0. This is
// the production evaluator used for integration.
std::vector<double> drift_expanded(const DriftInput& in);

// The set-growth rate alone: s_1/s_0 + 2*d*z_0/s_0. Lies in [1, 2] whenever
// all z_j >= 0 and s_0 > 0, because s_0 = s_1 + d*z_0.
double set_growth_rate(const DriftInput& in);

}  // namespace tdom
