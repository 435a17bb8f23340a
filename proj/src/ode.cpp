#include "tdom/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "tdom/drift.hpp"

namespace tdom {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::Z0CrossedEps: return "Z0_CROSSED_EPS";
    case StopReason::DomainExit: return "DOMAIN_EXIT";
    case StopReason::MaxX: return "MAX_X";
  }
  return "?";
}

namespace {

// State layout: y[0..d-1] = z, y[d] = q.
using State = std::vector<double>;

State rhs(int d, const State& y) {
  DriftInput in{d, State(y.begin(), y.begin() + d)};
  return drift_expanded(in);  // already sized d+1 with q' last
}

State rk4_step(int d, const State& y, double h) {
  const std::size_t m = y.size();
  const State k1 = rhs(d, y);
  State tmp(m);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  const State k2 = rhs(d, tmp);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  const State k3 = rhs(d, tmp);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
  const State k4 = rhs(d, tmp);
  State out(m);
  for (std::size_t i = 0; i < m; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

bool in_domain(int d, const State& y) {
  double s0 = 0.0;
  for (int j = 0; j < d; ++j) {
    if (!std::isfinite(y[j]) || y[j] < -1e-6 || y[j] > 1.0 + 1e-6) return false;
    s0 += (d - j) * y[j];
  }
  return s0 > 0.0 && std::isfinite(y[d]);
}

void record(SolveResult& result, double x, const State& y, int d) {
  result.trajectory.push_back({x, State(y.begin(), y.begin() + d), y[d]});
}

}  // namespace

SolveResult integrate(int d, const IntegrateOptions& opts) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  if (!(opts.eps_stop > 0.0) || opts.eps_stop > 1e-3)
    throw std::invalid_argument("eps_stop must lie in (0, 1e-3]");
  if (!(opts.step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(opts.max_x > 0.0)) throw std::invalid_argument("max_x must be positive");
  if (opts.sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");

  SolveResult result;
  result.d = d;
  result.options = opts;

  State y(static_cast<std::size_t>(d) + 1, 0.0);
  y[0] = 1.0;
  double x = 0.0;
  record(result, x, y, d);

  std::int64_t steps = 0;
  while (x < opts.max_x) {
    const State before = y;
    y = rk4_step(d, y, opts.step);
    x += opts.step;
    ++steps;

    if (y[0] <= opts.eps_stop) {
      // Bisect the crossing on this step to 1e-12 in x.
      double lo = 0.0, hi = 1.0;
      State at_hi = y;
      for (int it = 0; it < 64 && (hi - lo) * opts.step > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const State at_mid = rk4_step(d, before, mid * opts.step);
        if (at_mid[0] <= opts.eps_stop) {
          hi = mid;
          at_hi = at_mid;
        } else {
          lo = mid;
        }
      }
      y = at_hi;
      x = x - opts.step + hi * opts.step;
      result.stop_reason = StopReason::Z0CrossedEps;
      break;
    }
    if (!in_domain(d, y)) {
      result.stop_reason = StopReason::DomainExit;
      break;
    }
    if (steps % opts.sample_stride == 0) record(result, x, y, d);
  }
  if (x >= opts.max_x && result.stop_reason == StopReason::MaxX) {
    // fell through without crossing; keep the reason as MaxX
  }
  record(result, x, y, d);
  result.x_star = x;
  result.q_at_x_star = y[d];
  return result;
}

std::vector<double> SolveResult::z_at(double x) const {
  const auto interp = [&](const TrajectoryPoint& a, const TrajectoryPoint& b) {
    const double span = b.x - a.x;
    const double w = span > 0.0 ? std::clamp((x - a.x) / span, 0.0, 1.0) : 0.0;
    std::vector<double> z(a.z.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = a.z[j] + w * (b.z[j] - a.z[j]);
    return z;
  };
  if (trajectory.empty()) throw std::logic_error("empty trajectory");
  if (x <= trajectory.front().x) return trajectory.front().z;
  if (x >= trajectory.back().x) return trajectory.back().z;
  const auto it = std::lower_bound(
      trajectory.begin(), trajectory.end(), x,
      [](const TrajectoryPoint& p, double xv) { return p.x < xv; });
  return interp(*(it - 1), *it);
}

double SolveResult::q_at(double x) const {
  if (trajectory.empty()) throw std::logic_error("empty trajectory");
  if (x <= trajectory.front().x) return trajectory.front().q;
  if (x >= trajectory.back().x) return trajectory.back().q;
  const auto it = std::lower_bound(
      trajectory.begin(), trajectory.end(), x,
      [](const TrajectoryPoint& p, double xv) { return p.x < xv; });
  const TrajectoryPoint& a = *(it - 1);
  const TrajectoryPoint& b = *it;
  const double span = b.x - a.x;
  const double w = span > 0.0 ? std::clamp((x - a.x) / span, 0.0, 1.0) : 0.0;
  return a.q + w * (b.q - a.q);
}

InitialBehaviorReport initial_derivative_check(int d) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  // Dense early trajectory: every step recorded up to x = 1.05e-2.
  IntegrateOptions opts;
  opts.step = 1e-6;
  opts.max_x = 1.05e-2;
  opts.sample_stride = 1;
  const SolveResult sol = integrate(d, opts);

  InitialBehaviorReport report;
  report.d = d;
  report.z1_rate_expected = 2.0 * (d - 1);
  {
    const double x0 = 1e-5;
    report.z1_rate = sol.z_at(x0)[1] / x0;
  }

  constexpr double kFloor = 1e-13;     // double-precision noise level for these sums
  constexpr double kFitLo = 1e-4, kFitHi = 1e-3;
  constexpr int kFitPoints = 15;

  report.all_positive = true;
  report.all_fitted_ok = true;
  for (int j = 1; j < d; ++j) {
    SlopeFit fit;
    fit.j = j;

    // Log-spaced fit abscissae on [1e-4, 1e-3].
    double sum_lx = 0, sum_ly = 0, sum_lxx = 0, sum_lxy = 0;
    double min_value = std::numeric_limits<double>::infinity();
    bool usable = true;
    for (int i = 0; i < kFitPoints; ++i) {
      const double t = static_cast<double>(i) / (kFitPoints - 1);
      const double xv = kFitLo * std::pow(kFitHi / kFitLo, t);
      const double zv = sol.z_at(xv)[j];
      min_value = std::min(min_value, zv);
      if (zv < kFloor) {
        usable = false;
        continue;
      }
      const double lx = std::log(xv), ly = std::log(zv);
      sum_lx += lx;
      sum_ly += ly;
      sum_lxx += lx * lx;
      sum_lxy += lx * ly;
    }
    fit.min_value = min_value;
    if (usable) {
      const double n = kFitPoints;
      fit.slope = (n * sum_lxy - sum_lx * sum_ly) / (n * sum_lxx - sum_lx * sum_lx);
      fit.fitted = true;
      fit.ok = std::fabs(fit.slope - j) <= 0.1;
      if (!fit.ok) report.all_fitted_ok = false;
    }

    // Positivity: once the component first exceeds the noise floor, it must
    // stay strictly positive through the end of the integrated window.
    bool above_floor_seen = false;
    bool positive_ok = false;
    for (const TrajectoryPoint& p : sol.trajectory) {
      if (p.x <= 0.0) continue;
      if (!above_floor_seen) {
        if (p.z[j] > kFloor) {
          above_floor_seen = true;
          positive_ok = true;
        }
      } else if (p.z[j] <= 0.0) {
        positive_ok = false;
        break;
      }
    }
    if (!positive_ok) report.all_positive = false;
    report.fits.push_back(fit);
  }
  return report;
}

}  // namespace tdom
