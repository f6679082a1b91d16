#include "corrgap/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corrgap {

namespace {

void check_t(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("closed forms need t > 0");
}

}  // namespace

TwoSiteSolution two_site_solution(double u, double t) {
  check_t(t);
  const double root = std::sqrt(u * u + t * t);
  TwoSiteSolution s;
  s.e_gs = u - root;
  s.e_es = u + root;
  s.e_hf = -t + u;
  s.e_gap = 2.0 * root;
  s.gap_dimless = s.e_gap / t;
  s.n_plus = 0.5 + 1.0 / s.gap_dimless;
  s.n_minus = 0.5 - 1.0 / s.gap_dimless;
  s.delta_l1 = 2.0 - 4.0 / s.gap_dimless;
  s.bound_ratio = 0.5 * (1.0 - 2.0 / s.gap_dimless);
  s.d_overlap = s.bound_ratio;
  return s;
}

ThreeSiteSolution three_site_solution(double u, double t) {
  check_t(t);
  const double q = 4.0 * u * u / 9.0 + 3.0 * t * t / 4.0;
  double cos_theta = 8.0 * u * u * u / (27.0 * std::pow(q, 1.5));
  if (std::abs(cos_theta) > 1.0) {
    if (std::abs(cos_theta) > 1.0 + 1e-12) {
      throw std::runtime_error("cubic discriminant out of range");
    }
    cos_theta = std::clamp(cos_theta, -1.0, 1.0);
  }
  const double theta = std::acos(cos_theta);

  ThreeSiteSolution s;
  s.q_coeff = q;
  s.theta = theta;
  for (int j = 0; j < 3; ++j) {
    s.energies[j] =
        -2.0 * std::sqrt(q) * std::cos((theta - 2.0 * std::numbers::pi * j) / 3.0) + 4.0 * u / 3.0;
  }
  std::sort(s.energies.begin(), s.energies.end());
  s.e_hf = -1.5 * t + 4.0 * u / 3.0;
  s.e_gap = s.energies[1] - s.energies[0];
  s.gap_dimless = s.e_gap / t;
  return s;
}

double three_site_gap_sine_form(double u, double t) {
  check_t(t);
  const ThreeSiteSolution s = three_site_solution(u, t);
  return -2.0 * std::sqrt(3.0 * s.q_coeff) * std::sin((s.theta - std::numbers::pi) / 3.0);
}

}  // namespace corrgap
