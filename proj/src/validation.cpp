#include "deuteron/validation.hpp"

#include "deuteron/observables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace deuteron {

namespace {

constexpr double kStepsPerRadius = 256.0;

std::string format_r(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r);
  return buf;
}

void add(ValidationReport& report, std::string name, double measured, double tolerance) {
  report.checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double value_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

BoundaryCheck check_boundary(Wave wave, Region left, Region right, double r,
                             const ModelParams& params, const BranchEvaluator& evaluator) {
  auto branch = [&](Region region) {
    return quad::Integrand([&, region](double rr) { return evaluator(wave, region, rr, params); });
  };
  const quad::Integrand f_left = branch(left);
  const quad::Integrand f_right = branch(right);
  BoundaryCheck c{};
  c.r = r;
  c.left = left;
  c.right = right;
  c.value_left = f_left(r);
  c.value_right = f_right(r);
  // Near r = b2 - b1 the middle branch carries 1/r^2 terms, so its length scale
  // is the boundary radius itself.
  const double h = std::min(kDerivativeStep, r / kStepsPerRadius);
  c.derivative_left = quad::differentiate_one_sided(f_left, r, h, quad::Side::Left);
  c.derivative_right = quad::differentiate_one_sided(f_right, r, h, quad::Side::Right);
  return c;
}

std::vector<std::pair<double, std::pair<Region, Region>>> region_boundaries(const ModelParams& params) {
  std::vector<std::pair<double, std::pair<Region, Region>>> out;
  if (!params.equal_range()) out.push_back({params.inner_boundary(), {Region::Inner, Region::Middle}});
  out.push_back({params.outer_boundary(), {Region::Middle, Region::Outer}});
  return out;
}

BranchEvaluator faulted_evaluator(double middle_w_scale) {
  if (middle_w_scale == 1.0) return branch_value;
  return [middle_w_scale](Wave wave, Region region, double r, const ModelParams& params) {
    const double v = branch_value(wave, region, r, params);
    return (wave == Wave::D && region == Region::Middle) ? middle_w_scale * v : v;
  };
}

ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options) {
  ValidationReport report;
  const BranchEvaluator evaluator = faulted_evaluator(options.middle_w_fault_scale);

  for (const auto& [r, regions] : region_boundaries(params)) {
    for (Wave wave : {Wave::S, Wave::D}) {
      const char* wname = wave == Wave::S ? "u" : "w";
      const BoundaryCheck c = check_boundary(wave, regions.first, regions.second, r, params, evaluator);
      const std::string where = std::string(to_string(regions.first)) + "/" +
                                std::string(to_string(regions.second)) + " r=" + format_r(r);
      add(report, std::string("continuity ") + wname + " " + where,
          value_deviation(c.value_left, c.value_right), options.value_tolerance);
      add(report, std::string("derivative continuity ") + wname + " " + where,
          relative_deviation(c.derivative_left, c.derivative_right), options.derivative_tolerance);
    }
  }

  const TransformReport transform =
      validate_transforms(params, options.transform_grid, TransformOptions{}, evaluator);
  add(report, "transform oracle u (max abs deviation)", transform.max_abs_dev_u,
      options.transform_tolerance);
  add(report, "transform oracle w (max abs deviation)", transform.max_abs_dev_w,
      options.transform_tolerance);

  const double ps_k = prob_S_numeric(params);
  const double pd_k = prob_D_numeric(params);
  add(report, "parseval S (k-space vs r-space)", std::abs(ps_k - norm_S_coordinate(params)),
      options.parseval_tolerance);
  add(report, "parseval D (k-space vs r-space)", std::abs(pd_k - norm_D_coordinate(params)),
      options.parseval_tolerance);

  if (params.equal_range()) {
    add(report, "closed vs numeric P_S (relative)", relative_deviation(prob_S_closed(params), ps_k),
        options.closed_S_tolerance);
    add(report, "closed vs numeric P_D (relative)", relative_deviation(prob_D_closed(params), pd_k),
        options.closed_D_tolerance);
  }
  return report;
}

}  // namespace deuteron
