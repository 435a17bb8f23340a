#pragma once

#include <vector>

namespace tdom {

struct IntegrateOptions {
  double eps_stop = 1e-6;  // stop when z_0 falls to this level; in (0, 1e-3]
  double step = 1e-5;      // fixed fourth-order Runge-Kutta step in x
  double max_x = 1.5;      // safety bound (theory gives x* <= 1)
  int sample_stride = 10;  // record every k-th step in the trajectory
};

enum class StopReason {
  Z0CrossedEps,  // normal termination: z_0 reached eps_stop
  DomainExit,    // a state component left its admissible range
  MaxX,          // reached max_x without crossing
};

const char* to_string(StopReason r);

struct TrajectoryPoint {
  double x;
  std::vector<double> z;
  double q;
};

struct SolveResult {
  int d = 0;
  IntegrateOptions options;
  double x_star = 0.0;       // crossing location (or last x on abnormal stop)
  double q_at_x_star = 0.0;  // set fraction there
  StopReason stop_reason = StopReason::MaxX;
  std::vector<TrajectoryPoint> trajectory;  // includes x = 0 and the stop point

  // Linear interpolation on the sampled trajectory, clamped at both ends.
  std::vector<double> z_at(double x) const;
  double q_at(double x) const;
};

// Integrate z' = f(z), q' = f_d(z) from z = (1, 0, ..., 0), q = 0 with fixed
// classical RK4 steps on the expanded drift. The z_0 = eps_stop crossing is
// refined by bisection on the final step to within 1e-12 in x. Throws
// std::invalid_argument on d < 3 or out-of-range options.
SolveResult integrate(int d, const IntegrateOptions& opts = {});

// Small-x behavior of one component of the solution.
struct SlopeFit {
  int j = 0;              // component index, 1..d-1
  bool fitted = false;    // false when the component stays below the numeric floor
  double slope = 0.0;     // log-log slope on the fit window (expected: j)
  bool ok = false;        // fitted and |slope - j| <= 0.1
  double min_value = 0.0; // smallest value on the fit window
};

// Verifies z_j(x) ~ c_j x^j with c_j > 0 near x = 0: fits log-log slopes on
// x in [1e-4, 1e-3] and checks positivity once each component rises above the
// double-precision noise floor (components of order x^j with j >= 5 are
// smaller than 1e-15 on the fit window and cannot be assessed there; they are
// reported as not fitted rather than failed).
struct InitialBehaviorReport {
  int d = 0;
  double z1_rate = 0.0;           // z_1(x0)/x0 at x0 = 1e-5
  double z1_rate_expected = 0.0;  // 2*(d-1)
  std::vector<SlopeFit> fits;     // j = 1..d-1
  bool all_positive = false;      // every component positive past its floor crossing
  bool all_fitted_ok = false;     // every fitted slope within +-0.1 of j
};

InitialBehaviorReport initial_derivative_check(int d);

}  // namespace tdom
