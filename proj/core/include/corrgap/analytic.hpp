#pragma once

#include <array>

namespace corrgap {

// Closed forms for the 2-site ring at half filling (n_up = n_down = 1),
// ground-state sector (s = 0, m = 0, p = 0). The dimensionless gap is
// Delta = e_gap / t, and the natural occupations are 1/2 +- 1/Delta, each
// twice.
struct TwoSiteSolution {
  double e_gs;
  double e_es;
  double e_hf;
  double e_gap;
  double gap_dimless;    // Delta = 2 sqrt(U^2 + t^2) / t
  double n_plus;         // 1/2 + 1/Delta
  double n_minus;        // 1/2 - 1/Delta
  double delta_l1;       // 2 - 4/Delta
  double d_overlap;      // equals bound_ratio exactly for this model
  double bound_ratio;    // (1 - 2/Delta) / 2
};

TwoSiteSolution two_site_solution(double u, double t);

// Closed forms for the 3-site ring with (n_up, n_down) = (2, 1), sector
// (s = 1/2, m = 1/2, p = 2) and its momentum mirror. The three sector
// energies are the roots of the depressed cubic,
//   E_j = -2 sqrt(Q) cos((theta - 2 pi j)/3) + 4U/3,
//   Q = 4U^2/9 + 3t^2/4,   cos(theta) = 8U^3 / (27 Q^(3/2)),
// and the sector gap has the equivalent form
//   e_gap = -2 sqrt(3 Q) sin((theta - pi)/3).
struct ThreeSiteSolution {
  double q_coeff;                  // Q
  double theta;
  std::array<double, 3> energies;  // ascending
  double e_hf;                     // -3t/2 + 4U/3
  double e_gap;                    // energies[1] - energies[0]
  double gap_dimless;              // e_gap / t
};

ThreeSiteSolution three_site_solution(double u, double t);

// Sector gap through the sine form; agrees with the root difference.
double three_site_gap_sine_form(double u, double t);

}  // namespace corrgap
