#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Units throughout: lengths in fm, alpha in fm^-1, normalisations A and B
// in fm^-1/2, hbar = c = 1.

namespace deuteron {

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Below this separation the two range parameters are treated as equal and
// the inner region is empty.
inline constexpr double kRegionEpsilon = 1e-9;

// Validated model record. Construct through make_params; b2 >= b1 always.
class ModelParams {
 public:
  double b1() const noexcept { return b1_; }
  double b2() const noexcept { return b2_; }
  double alpha() const noexcept { return alpha_; }
  double A() const noexcept { return A_; }
  double B() const noexcept { return B_; }

  // inner boundary b2 - b1 and outer boundary b1 + b2
  double inner_boundary() const noexcept { return b2_ - b1_; }
  double outer_boundary() const noexcept { return b1_ + b2_; }
  bool equal_range() const noexcept { return b2_ - b1_ < kRegionEpsilon; }

  ModelParams with_normalisation(double A, double B) const;

  friend ModelParams make_params(double b1, double b2, double alpha, double A, double B);
  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams() = default;
  double b1_ = 0.0;
  double b2_ = 0.0;
  double alpha_ = 0.0;
  double A_ = 0.0;
  double B_ = 0.0;
};

ModelParams make_params(double b1, double b2, double alpha, double A, double B);

// Central and tensor strengths already divided by the nucleon mass.
struct PotentialStrengths {
  double lambdaC_over_M;
  double lambdaT_over_M;
};

PotentialStrengths make_strengths(double lambdaC_over_M, double lambdaT_over_M);

enum class Region { Inner, Middle, Outer };

std::string_view to_string(Region region);

// Boundary points report the lower region. For equal ranges the inner
// region is empty and r = 0 is Middle.
Region region_of(double r, const ModelParams& params);

struct RegionInterval {
  double lo;
  double hi;  // +inf for Outer
};

RegionInterval interval_of(Region region, const ModelParams& params);

}  // namespace deuteron
