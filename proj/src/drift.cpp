#include "tdom/drift.hpp"

#include <cmath>
#include <stdexcept>

namespace tdom {

namespace {

constexpr double kS1Floor = 1e-30;  // below this, s_1-terms take their algebraic limit

void check_input(const DriftInput& in) {
  if (in.d < 3) throw std::invalid_argument("degree must be at least 3");
  if (static_cast<int>(in.z.size()) != in.d)
    throw std::invalid_argument("z must have exactly d entries");
  for (double zj : in.z) {
    if (!std::isfinite(zj)) throw std::invalid_argument("z entries must be finite");
  }
}

double ipow(double base, int exp) {
  double result = 1.0;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

// One-round change of class j caused by moving one point of a degree-k
// vertex (k = 0 or 1) up one class, weighted by class populations:
//   j >  k : (d-j+1) z_{j-1} - (d-j) z_j
//   j == k : -(d-j) z_j
//   j <  k : 0
double phi_shift(const DriftInput& in, int j, int k) {
  const int d = in.d;
  if (j > k) return (d - j + 1) * in.z[j - 1] - (d - j) * in.z[j];
  if (j == k) return -(d - j) * in.z[j];
  return 0.0;
}

struct Common {
  int d;
  double s0, s1, r, big_r;  // r = s_1/s_0, big_r = r^{d-1}
  double p;                 // chance the matched partner is a given uncovered point-mass: d z_0/s_0
  bool s1_tiny;
};

Common prepare(const DriftInput& in) {
  Common c;
  c.d = in.d;
  c.s0 = s_mass(in, 0);
  c.s1 = s_mass(in, 1);
  if (c.s0 <= 0.0) throw std::domain_error("drift undefined: s_0 <= 0");
  c.r = c.s1 / c.s0;
  c.big_r = ipow(c.r, in.d - 1);
  c.p = in.d * in.z[0] / c.s0;
  c.s1_tiny = std::fabs(c.s1) < kS1Floor;
  return c;
}

}  // namespace

double s_mass(const DriftInput& in, int k) {
  double total = 0.0;
  for (int i = k; i < in.d; ++i) total += (in.d - i) * in.z[i];
  return total;
}

double set_growth_rate(const DriftInput& in) {
  check_input(in);
  const double s0 = s_mass(in, 0);
  if (s0 <= 0.0) throw std::domain_error("drift undefined: s_0 <= 0");
  return s_mass(in, 1) / s0 + 2.0 * in.d * in.z[0] / s0;
}

std::vector<double> drift_raw(const DriftInput& in) {
  check_input(in);
  const Common c = prepare(in);
  const int d = c.d;
  std::vector<double> out(static_cast<std::size_t>(d) + 1);

  for (int j = 0; j < d; ++j) {
    const double dj0 = (j == 0) ? 1.0 : 0.0;
    const double dj1 = (j == 1) ? 1.0 : 0.0;
    const double a = (d - 1) * phi_shift(in, j, 0) / c.s0;
    const double b = c.s1_tiny ? 0.0 : (d - 1) * phi_shift(in, j, 1) / c.s1;

    // Expected effect of the partner-matching chain on class j, split by the
    // partner's covered state: h is the part conditioned on a covered
    // neighborhood resolution (denominator 1 - r^{d-1} is the chance the
    // chain stops).
    const double h = (a - b * c.big_r) / (1.0 - c.big_r);
    const double e2 = -2.0 * dj0 + a + h;
    const double e3 = -2.0 * dj0 - dj1 + a + b + h;
    double e4 = -2.0 * dj0 + 2.0 * b;
    for (int m = 1; m < d; ++m) {
      const double weight = c.s1_tiny ? 0.0 : (d - m) * in.z[m] / c.s1;
      const double dmj = (m + 1 == j) ? 1.0 : 0.0;
      e4 += 2.0 * weight * (-dmj + (d - m - 1) * phi_shift(in, j, 0) / c.s0);
    }

    // One uncovered vertex always consumes one point and shifts classes by
    // its matched partner's exposure fan-out.
    double value = 0.0;
    for (int i = 1; i < d; ++i) {
      const double bi = (d - i) * in.z[i] / c.s0;
      const double delta_ji = (j == i) ? 1.0 : 0.0;
      value += bi * (-dj0 + dj1 - delta_ji + (d - i - 1) * phi_shift(in, j, 0) / c.s0);
    }
    value += c.p * (1.0 - c.big_r) * e2;
    value += c.p * c.big_r * (1.0 - c.big_r) * e3;
    value += c.p * c.big_r * c.big_r * e4;
    out[static_cast<std::size_t>(j)] = value;
  }
  out[static_cast<std::size_t>(d)] = c.r + 2.0 * c.p;
  return out;
}

std::vector<double> drift_expanded(const DriftInput& in) {
  check_input(in);
  const Common c = prepare(in);
  const int d = c.d;
  const double r_dm2 = ipow(c.r, d - 2);
  const double r_2dm3 = ipow(c.r, 2 * d - 3);
  std::vector<double> out(static_cast<std::size_t>(d) + 1);

  for (int j = 0; j < d; ++j) {
    const double dj0 = (j == 0) ? 1.0 : 0.0;
    const double dj1 = (j == 1) ? 1.0 : 0.0;
    const double a = (d - 1) * phi_shift(in, j, 0) / c.s0;
    const double g = phi_shift(in, j, 1) / c.s0;

    double value = 0.0;
    for (int i = 1; i < d; ++i) {
      const double bi = (d - i) * in.z[i] / c.s0;
      const double delta_ji = (j == i) ? 1.0 : 0.0;
      value += bi * (-dj0 + dj1 - delta_ji + (d - i - 1) * phi_shift(in, j, 0) / c.s0);
    }

    // Same branch effects as drift_raw with every 1/s_1 rewritten through
    // s_1 = r s_0 and the 1/(1 - r^{d-1}) factors cancelled, so only 1/s_0
    // remains.
    value += c.p * (1.0 - c.big_r) * (-2.0 * dj0 + a);
    value += c.p * (a - (d - 1) * g * r_dm2);
    value += c.p * c.big_r * (1.0 - c.big_r) * (-2.0 * dj0 - dj1 + a);
    value += (d - 1) * c.p * r_dm2 * (1.0 - c.big_r) * g;
    value += c.p * c.big_r * (a - (d - 1) * g * r_dm2);
    value += -2.0 * dj0 * c.p * c.big_r * c.big_r;
    for (int m = 1; m < d; ++m) {
      const double weight = (d - m) * in.z[m] / c.s0;
      const double dmj = (m == j) ? 1.0 : 0.0;
      value += 2.0 * c.p * r_2dm3 * weight * (-dmj + (d - m - 1) * phi_shift(in, j, 0) / c.s0);
    }
    value += 2.0 * (d - 2) * c.p * r_2dm3 * g;
    out[static_cast<std::size_t>(j)] = value;
  }
  out[static_cast<std::size_t>(d)] = c.r + 2.0 * c.p;
  return out;
}

}  // namespace tdom
