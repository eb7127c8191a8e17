#pragma once

#include "deuteron/coordinate.hpp"
#include "deuteron/model.hpp"
#include "deuteron/transform.hpp"

#include <string>
#include <vector>

namespace deuteron {

struct CheckResult {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct ValidationOptions {
  double value_tolerance = 1e-10;       // branch agreement, relative to max(1, |value|)
  double derivative_tolerance = 1e-8;   // one-sided derivative agreement, relative
  double transform_tolerance = 1e-7;    // absolute
  double parseval_tolerance = 1e-7;     // absolute
  double closed_S_tolerance = 1e-8;     // relative
  double closed_D_tolerance = 1e-6;     // relative
  std::vector<double> transform_grid = kDefaultTransformGrid;
  // Fault injection: multiplies the middle-region D-wave branch.
  double middle_w_fault_scale = 1.0;
};

// |a - b| / max(1, |a|, |b|)
double value_deviation(double a, double b);
// |a - b| / max(|a|, |b|), 0 when both vanish
double relative_deviation(double a, double b);

struct BoundaryCheck {
  double r;
  Region left;
  Region right;
  double value_left;
  double value_right;
  double derivative_left;
  double derivative_right;
};

// Both adjacent branches evaluated at the boundary r, derivatives from
// stencils that stay on each branch's own side.
BoundaryCheck check_boundary(Wave wave, Region left, Region right, double r,
                             const ModelParams& params, const BranchEvaluator& evaluator = branch_value);

// Region boundaries present for these params: b2 - b1 (unequal ranges only)
// and b1 + b2.
std::vector<std::pair<double, std::pair<Region, Region>>> region_boundaries(const ModelParams& params);

BranchEvaluator faulted_evaluator(double middle_w_scale);

ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options = {});

}  // namespace deuteron
