#include "deuteron/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace deuteron {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out = "invalid model parameters: ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += "; ";
    out += items[i];
  }
  return out;
}

void require_positive(std::vector<std::string>& problems, const char* name, double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    problems.push_back(std::string(name) + " must be finite and > 0 (got " +
                       std::to_string(value) + ")");
  }
}

void require_non_negative(std::vector<std::string>& problems, const char* name,
                          double value) {
  if (!std::isfinite(value) || value < 0.0) {
    problems.push_back(std::string(name) + " must be finite and >= 0 (got " +
                       std::to_string(value) + ")");
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}

ModelParams make_params(double b1, double b2, double alpha, double A, double B) {
  std::vector<std::string> problems;
  require_positive(problems, "b1", b1);
  require_positive(problems, "b2", b2);
  require_positive(problems, "alpha", alpha);
  require_non_negative(problems, "A", A);
  require_non_negative(problems, "B", B);
  if (!problems.empty()) throw ValidationError(std::move(problems));

  ModelParams p;
  p.b1_ = std::min(b1, b2);
  p.b2_ = std::max(b1, b2);
  p.alpha_ = alpha;
  p.A_ = A;
  p.B_ = B;
  return p;
}

ModelParams ModelParams::with_normalisation(double A, double B) const {
  return make_params(b1_, b2_, alpha_, A, B);
}

PotentialStrengths make_strengths(double lambdaC_over_M, double lambdaT_over_M) {
  std::vector<std::string> problems;
  require_positive(problems, "lambdaC/M", lambdaC_over_M);
  require_positive(problems, "lambdaT/M", lambdaT_over_M);
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return {lambdaC_over_M, lambdaT_over_M};
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Inner:
      return "inner";
    case Region::Middle:
      return "middle";
    case Region::Outer:
      return "outer";
  }
  return "unknown";
}

Region region_of(double r, const ModelParams& params) {
  if (!params.equal_range() && r <= params.inner_boundary()) return Region::Inner;
  if (r <= params.outer_boundary()) return Region::Middle;
  return Region::Outer;
}

RegionInterval interval_of(Region region, const ModelParams& params) {
  const double inner = params.equal_range() ? 0.0 : params.inner_boundary();
  switch (region) {
    case Region::Inner:
      return {0.0, inner};
    case Region::Middle:
      return {inner, params.outer_boundary()};
    case Region::Outer:
      break;
  }
  return {params.outer_boundary(), std::numeric_limits<double>::infinity()};
}

}  // namespace deuteron
