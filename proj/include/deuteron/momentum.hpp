#pragma once

#include "deuteron/model.hpp"

namespace deuteron {

inline constexpr double kSqrtTwoOverPi = 0.79788456080286535587989211986876;  // sqrt(2/pi)

enum class Channel { Central, Tensor };

struct MomentumAmplitude {
  double k;      // fm^-1
  double value;  // fm^3/2
};

// g_C(k) = j0(b1 k) j0(b2 k)
double form_factor_central(double k, const ModelParams& params);
// g_T(k) = j1(b1 k) j1(b2 k); behaves as b1 b2 k^2 / 9 near k = 0
double form_factor_tensor(double k, const ModelParams& params);

// S- and D-state momentum wavefunctions
//   u(k) = A sqrt(2/pi) g_C(k) / (k^2 + alpha^2)
//   w(k) = B sqrt(2/pi) g_T(k) / (k^2 + alpha^2)
double u_momentum(double k, const ModelParams& params);
double w_momentum(double k, const ModelParams& params);

// Separable kernels: -(lambdaC/M) g_C(k) g_C(k') and +(lambdaT/M) g_T(k) g_T(k').
double potential_kernel(Channel channel, double k, double kprime, const ModelParams& params,
                        const PotentialStrengths& strengths);

}  // namespace deuteron
