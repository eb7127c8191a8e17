#pragma once

#include "deuteron/model.hpp"
#include "deuteron/quadrature.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace deuteron {

enum class ProbabilityPath { Closed, Numeric };

std::string_view to_string(ProbabilityPath path);

struct ObservablesReport {
  double P_S = 0.0;
  double P_D = 0.0;
  double A_S = 0.0;    // fm^-1/2
  double A_D = 0.0;    // fm^-1/2
  double eta = 0.0;
  double r_rms = 0.0;  // fm
  double Q = 0.0;      // fm^2
  ProbabilityPath path = ProbabilityPath::Closed;
  std::vector<std::string> warnings;
};

// |P_S + P_D - 1| above this is reported as un-normalised.
inline constexpr double kNormalisationWarning = 1e-3;

// Closed-form probabilities for b1 = b2 = b. With y = alpha b,
//   P_S = A^2 / (16 alpha^5 b^4) S(y)
//   P_D = B^2 / (240 alpha^9 b^8) T(y)
// S(y) = O(y^4) and T(y) = O(y^9): both brackets are differences of O(1..100)
// terms, so they are summed with compensation and replaced by their Taylor
// series below kProbSSeriesBelow / kProbDSeriesBelow. At the physical
// y ~ 0.34 the T bracket still loses about six digits.
inline constexpr double kProbSSeriesBelow = 0.05;
inline constexpr double kProbDSeriesBelow = 0.2;

double prob_S_bracket(double y);
double prob_D_bracket(double y);
double prob_S_bracket_closed(double y);
double prob_D_bracket_closed(double y);
double prob_S_bracket_series(double y);
double prob_D_bracket_series(double y);
// Taylor coefficient of y^n, computed from the exponential series.
double prob_S_bracket_coefficient(int n);
double prob_D_bracket_coefficient(int n);

// Throw std::domain_error unless b2 - b1 < kRegionEpsilon.
double prob_S_closed(const ModelParams& params);
double prob_D_closed(const ModelParams& params);

// int_0^inf k^2 u(k)^2 dk and the D-state analogue, any b2 >= b1.
double prob_S_numeric(const ModelParams& params, int panel_order = 40);
double prob_D_numeric(const ModelParams& params, int panel_order = 40);

// int_0^inf u(r)^2 dr and int_0^inf w(r)^2 dr; equal to the momentum-space
// probabilities by Parseval.
double norm_S_coordinate(const ModelParams& params, int panel_order = 40);
double norm_D_coordinate(const ModelParams& params, int panel_order = 40);

// Breakpoints at 0, b2 - b1 (if non-empty) and b1 + b2, panels at most 1 fm
// wide inside, and an exponential tail decaying as exp(-2 alpha r).
quad::QuadratureScheme radial_scheme(const ModelParams& params, int panel_order = 40);

// Normalisation constants with P_S + P_D = 1 and B^2 = ratio A^2.
// Uses the closed forms for equal ranges, quadrature otherwise.
ModelParams solve_normalisation(double b1, double b2, double alpha, double ratio);

struct AsymptoticNormalisations {
  double A_S;
  double A_D;
};

AsymptoticNormalisations asymptotic_normalisations(const ModelParams& params);
double ds_ratio(const ModelParams& params);

double rms_radius(const ModelParams& params, int panel_order = 40);
double quadrupole_moment(const ModelParams& params, int panel_order = 40);

ObservablesReport report(const ModelParams& params);

}  // namespace deuteron
