#pragma once

#include <vector>

// Equal-range fit of the range parameter b and the ratio rho = B^2 / A^2 to
// a target rms radius and quadrupole moment. A and B are re-derived from
// P_S + P_D = 1 at every trial point, so normalisation holds throughout.

namespace deuteron {

struct FitTargets {
  double r_rms_target;  // fm, > 0
  double Q_target;      // fm^2, >= 0 (0 selects the pure S-state)
};

struct FitStart {
  double b;      // fm
  double ratio;  // B^2 / A^2
};

struct FitOptions {
  double tolerance = 1e-6;      // on the target-scaled residual norm
  int max_iterations = 50;
  double jacobian_step = 1e-4;  // relative forward-difference step
  int panel_order = 40;
  // fallback grid scan
  double grid_b_min = 0.5;
  double grid_b_max = 3.0;
  int grid_b_points = 26;
  double grid_ratio_max = 10.0;
  int grid_ratio_points = 21;
};

struct FitIteration {
  int iteration;
  double b;
  double ratio;
  double residual_norm;
  double step_scale;  // accepted damping factor
};

struct FitResult {
  double b = 0.0;
  double ratio = 0.0;
  double A = 0.0;
  double B = 0.0;
  double r_rms = 0.0;
  double Q = 0.0;
  double residual_r_rms = 0.0;  // r_rms - target, fm
  double residual_Q = 0.0;      // Q - target, fm^2
  double residual_norm = 0.0;   // scaled
  int iterations = 0;
  bool converged = false;
  bool used_grid_scan = false;
  std::vector<FitIteration> history;
};

struct FitObservables {
  double r_rms;
  double Q;
  double A;
  double B;
};

// r_rms and Q of the normalised equal-range model at (b, ratio).
FitObservables fit_observables(double b, double ratio, double alpha, int panel_order = 40);

// Throws ValidationError for r_rms_target <= 0, Q_target < 0, alpha <= 0,
// b0 <= 0 or ratio0 < 0. Non-convergence is reported through
// FitResult::converged, with the best point found.
FitResult fit_parameters(const FitTargets& targets, double alpha, const FitStart& initial,
                         const FitOptions& options = {});

}  // namespace deuteron
