#include "deuteron/momentum.hpp"

#include "deuteron/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace deuteron {

namespace {

void check_momentum(double k) {
  if (!std::isfinite(k) || k < 0.0) throw std::domain_error("momentum must be finite and >= 0");
}

double propagator(double k, double alpha) { return 1.0 / (k * k + alpha * alpha); }

}  // namespace

double form_factor_central(double k, const ModelParams& params) {
  check_momentum(k);
  return specfun::sph_bessel_j(0, params.b1() * k) * specfun::sph_bessel_j(0, params.b2() * k);
}

double form_factor_tensor(double k, const ModelParams& params) {
  check_momentum(k);
  return specfun::sph_bessel_j(1, params.b1() * k) * specfun::sph_bessel_j(1, params.b2() * k);
}

double u_momentum(double k, const ModelParams& params) {
  return params.A() * kSqrtTwoOverPi * form_factor_central(k, params) *
         propagator(k, params.alpha());
}

double w_momentum(double k, const ModelParams& params) {
  return params.B() * kSqrtTwoOverPi * form_factor_tensor(k, params) *
         propagator(k, params.alpha());
}

double potential_kernel(Channel channel, double k, double kprime, const ModelParams& params,
                        const PotentialStrengths& strengths) {
  if (channel == Channel::Central) {
    return -strengths.lambdaC_over_M * form_factor_central(k, params) *
           form_factor_central(kprime, params);
  }
  return strengths.lambdaT_over_M * form_factor_tensor(k, params) *
         form_factor_tensor(kprime, params);
}

}  // namespace deuteron
