#pragma once

#include "deuteron/model.hpp"
#include "deuteron/quadrature.hpp"

// Coordinate-space reduced wavefunctions u(r) (S-state) and w(r) (D-state).
//
// With x = alpha r the wavefunctions are analytic on each of three regions
//
//   inner   0 <= r <= b2 - b1
//   middle  b2 - b1 <= r <= b1 + b2
//   outer   r >= b1 + b2
//
// and are continuous with continuous first derivative across the region
// boundaries. For b1 = b2 the inner region is empty and the middle branch
// starts at r = 0.

namespace deuteron {

enum class Wave { S, D };

struct RadialSample {
  double r;
  double u;
  double w;
  Region region;
};

// Formulas for b2 > b1. Each branch is an analytic function and may be
// evaluated outside its own region (used for boundary comparisons).
namespace general {
double u(Region branch, double r, const ModelParams& params);
double w(Region branch, double r, const ModelParams& params);
}  // namespace general

// Formulas for b1 = b2 = b, with b taken as (b1 + b2) / 2. Region::Inner
// is treated as Region::Middle.
namespace equal_range {
double u(Region branch, double r, const ModelParams& params);
double w(Region branch, double r, const ModelParams& params);
}  // namespace equal_range

// Branch formula in force for these params (equal-range formulas when
// b2 - b1 < kRegionEpsilon).
double branch_value(Wave wave, Region branch, double r, const ModelParams& params);

double u_coordinate(double r, const ModelParams& params);
double w_coordinate(double r, const ModelParams& params);
RadialSample sample_radial(double r, const ModelParams& params);

// Regular part of x k2(x): x k2(x) - 3/x^2 + 1/2, which is O(x^2).
double xk2_regular_part(double x);

inline constexpr double kDerivativeStep = 1e-3;  // fm

// Derivative of one branch from samples on one side of r only.
double branch_derivative(Wave wave, Region branch, double r, const ModelParams& params,
                         quad::Side side, double h0 = kDerivativeStep);

// Derivative of the active branch at r. Stencils never leave the region of r:
// central differences inside a region, one-sided ones within 2 h0 of a boundary.
double du_dr(double r, const ModelParams& params, double h0 = kDerivativeStep);
double dw_dr(double r, const ModelParams& params, double h0 = kDerivativeStep);

}  // namespace deuteron
