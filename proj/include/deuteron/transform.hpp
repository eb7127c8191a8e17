#pragma once

#include "deuteron/coordinate.hpp"
#include "deuteron/model.hpp"
#include "deuteron/quadrature.hpp"

#include <stdexcept>
#include <vector>

// Numerical Fourier-Bessel transforms
//
//   u(r) = sqrt(2/pi) r  int_0^inf k^2 u(k) j0(kr) dk
//   w(r) = sqrt(2/pi) r  int_0^inf k^2 w(k) j2(kr) dk
//
// evaluated independently of the analytic coordinate-space branches so the
// two can be compared.

namespace deuteron {

class TransformConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransformOptions {
  double k_max = 80.0;          // fm^-1, first truncation point
  double tolerance = 1e-8;      // allowed change between successive k_max doublings
  int max_doublings = 8;
  int panel_order = 40;
  int panels_per_zero_spacing = 1;  // >1 subdivides every oscillation panel
};

// l in {0, 2}. Panels are spaced by pi / (r + range_scale), the zero spacing
// of the fastest oscillation in k^2 f(k) j_l(kr) when f carries form factors
// of total range range_scale (b1 + b2; 0 for a bare propagator).
double bessel_transform(int l, const quad::Integrand& f_of_k, double r, double range_scale,
                        const TransformOptions& options = {});

struct TransformPoint {
  double r;
  Region region;
  double u_transform;
  double u_analytic;
  double w_transform;
  double w_analytic;
  double dev_u;
  double dev_w;
};

struct TransformReport {
  std::vector<double> r_grid;
  std::vector<TransformPoint> points;
  double max_abs_dev_u = 0.0;
  double max_abs_dev_w = 0.0;
};

inline const std::vector<double> kDefaultTransformGrid{0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0};

// Analytic branch evaluator; defaults to branch_value. Replaceable for
// fault-injection runs.
using BranchEvaluator = std::function<double(Wave, Region, double, const ModelParams&)>;

TransformReport validate_transforms(const ModelParams& params,
                                    const std::vector<double>& r_grid = kDefaultTransformGrid,
                                    const TransformOptions& options = {},
                                    const BranchEvaluator& analytic = branch_value);

}  // namespace deuteron
