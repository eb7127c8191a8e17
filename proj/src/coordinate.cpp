#include "deuteron/coordinate.hpp"

#include "deuteron/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deuteron {

using specfun::mod_sph_bessel_i;
using specfun::mod_sph_bessel_k;

namespace {

// Below this x the middle-region D-wave bracket is evaluated in its
// pole-free form instead of the closed form. The closed form cancels two
// O(1/x^2) terms against each other; at x = 0.7 that already costs four
// digits.
constexpr double kPoleFreeBelow = 2.0;

void check_radius(double r) {
  if (!std::isfinite(r) || r < 0.0) throw std::domain_error("radius must be finite and >= 0");
}

// Series helpers for the pole-free D-wave bracket. They run in long double:
// near r = b2 - b1 the bracket is ~1e4 times smaller than its terms.
using ext = long double;

// cosh(d) - 1 - d^2/2
ext cosh_remainder(ext d) {
  if (d < 0.5L) {
    const ext d2 = d * d;
    ext term = d2 * d2 / 24.0L;
    ext sum = 0.0L;
    for (int n = 2; n < 24 && term > 1e-22L * sum; ++n) {
      sum += term;
      term *= d2 / ((2.0L * n + 1.0L) * (2.0L * n + 2.0L));
    }
    return sum;
  }
  return std::cosh(d) - 1.0L - 0.5L * d * d;
}

// d sinh(d) - d^2
ext dsinh_remainder(ext d) {
  if (d < 0.5L) {
    const ext d2 = d * d;
    ext term = d2 * d2 / 6.0L;
    ext sum = 0.0L;
    for (int n = 1; n < 24 && term > 1e-22L * sum; ++n) {
      sum += term;
      term *= d2 / ((2.0L * n + 2.0L) * (2.0L * n + 3.0L));
    }
    return sum;
  }
  return d * std::sinh(d) - d * d;
}

// x k2(x) - 3/x^2 + 1/2 = sum_{n>=2} (-1)^n (n^2 - 1) / (n + 2)! x^n
ext xk2_regular_series(ext x) {
  ext term = x * x / 24.0L;  // n = 2 without the (n^2 - 1) factor
  ext sum = 0.0L;
  for (int n = 2; n < 60; ++n) {
    const ext contribution = (n % 2 == 0 ? 1.0L : -1.0L) * (n * n - 1.0L) * term;
    sum += contribution;
    if (std::abs(contribution) < 1e-22L * std::abs(sum)) break;
    term *= x / (n + 3);
  }
  return sum;
}

// x i2(x) = x^3 sum_n (x^2/2)^n / (n! (2n + 5)!!)
ext xi2_series(ext x) {
  const ext half_x2 = 0.5L * x * x;
  ext term = x * x * x / 15.0L;
  ext sum = 0.0L;
  for (int n = 0; n < 60; ++n) {
    sum += term;
    if (term < 1e-22L * sum) break;
    term *= half_x2 / ((n + 1.0L) * (2.0L * n + 7.0L));
  }
  return sum;
}

double x_i2(double x) {
  if (x < kPoleFreeBelow) return static_cast<double>(xi2_series(x));
  return x * mod_sph_bessel_i(2, x);
}

// 1 - cosh(d) e^{-x} - e^{-s} sinh(x), without the cancellation at small x
double s_wave_bracket(double x, double delta, double sigma) {
  const double sh = std::sinh(0.5 * delta);
  const double cosh_minus_one = 2.0 * sh * sh;
  return -std::expm1(-x) - cosh_minus_one * std::exp(-x) - std::exp(-sigma) * std::sinh(x);
}

// Middle-region D-wave bracket constants, in long double: for small alpha b1
// the bracket is far smaller than its individual terms.
struct DWaveConstants {
  ext delta;  // alpha (b2 - b1)
  ext sigma;  // alpha (b1 + b2)
  ext beta2;  // alpha^2 b1 b2
  ext sumsq;  // alpha^2 (b1^2 + b2^2)
  ext pole;   // coefficient C of -3/x^2
  ext p;      // coefficient P of 8 x k2(x)
  ext eq;     // e^{-sigma} (beta^2 + sigma + 1), coefficient of -8 x i2(x)
};

DWaveConstants d_wave_constants(const ModelParams& params) {
  const ext a = params.alpha();
  const ext b1 = params.b1();
  const ext b2 = params.b2();
  DWaveConstants c{};
  c.delta = a * (b2 - b1);
  c.sigma = a * (b1 + b2);
  c.beta2 = a * a * b1 * b2;
  c.sumsq = a * a * (b1 * b1 + b2 * b2);
  const ext diff_sq = a * a * (b2 * b2 - b1 * b1);
  c.pole = diff_sq * diff_sq + 4.0L * c.sumsq - 8.0L;
  c.p = (c.beta2 - 1.0L) * std::cosh(c.delta) + c.delta * std::sinh(c.delta);
  c.eq = std::exp(-c.sigma) * (c.beta2 + c.sigma + 1.0L);
  return c;
}

// Middle-region D-wave bracket exactly as written in closed form.
double d_wave_bracket_closed(double x_in, const DWaveConstants& c) {
  const ext x = x_in;
  const ext x2 = x * x;
  const ext xk2 = std::exp(-x) * ((x + 3.0L) * x + 3.0L) / x2;
  const ext xi2 = ((x2 + 3.0L) * std::sinh(x) - 3.0L * x * std::cosh(x)) / x2;
  return static_cast<double>(2.0L * c.sumsq - 4.0L - 3.0L * c.pole / x2 + x2 + 8.0L * xk2 * c.p -
                             8.0L * xi2 * c.eq);
}

// Same bracket with the 1/x^2 poles of -3C/x^2 and 8P x k2(x) combined
// analytically:
//   K0 + (24P - 3C)/x^2 + x^2 + 8P [x k2(x) - 3/x^2 + 1/2] - 8EQ x i2(x)
// K0 and 24P - 3C are O(delta^2) and O(delta^4); both are formed from
// cosh/sinh remainders so they carry no cancellation error.
double d_wave_bracket_pole_free(double x_in, const DWaveConstants& c) {
  const ext x = x_in;
  const ext d = c.delta;
  const ext sh = std::sinh(0.5L * d);
  const ext cosh_minus_one = 2.0L * sh * sh;
  const ext k0 = 2.0L * d * d - 4.0L * (c.beta2 - 1.0L) * cosh_minus_one - 4.0L * d * std::sinh(d);
  const ext pole_residue = 24.0L * (c.beta2 - 1.0L) * cosh_remainder(d) +
                           24.0L * dsinh_remainder(d) - 3.0L * d * d * d * d;
  ext value = k0 + x * x + 8.0L * c.p * xk2_regular_series(x) - 8.0L * c.eq * xi2_series(x);
  if (pole_residue != 0.0L) value += pole_residue / (x * x);
  return static_cast<double>(value);
}

}  // namespace

double xk2_regular_part(double x) {
  if (x >= kPoleFreeBelow) return x * mod_sph_bessel_k(2, x) - 3.0 / (x * x) + 0.5;
  return static_cast<double>(xk2_regular_series(x));
}

namespace general {

double u(Region branch, double r, const ModelParams& params) {
  check_radius(r);
  const double a = params.alpha();
  const double x = a * r;
  const double ab1 = a * params.b1();
  const double ab2 = a * params.b2();
  switch (branch) {
    case Region::Inner:
      return params.A() * mod_sph_bessel_i(0, ab1) * mod_sph_bessel_k(0, ab2) * x *
             mod_sph_bessel_i(0, x);
    case Region::Middle:
      return params.A() / (2.0 * ab1 * ab2) * s_wave_bracket(x, ab2 - ab1, ab1 + ab2);
    case Region::Outer:
      break;
  }
  return params.A() * mod_sph_bessel_i(0, ab1) * mod_sph_bessel_i(0, ab2) * x *
         mod_sph_bessel_k(0, x);
}

double w(Region branch, double r, const ModelParams& params) {
  check_radius(r);
  const double a = params.alpha();
  const double x = a * r;
  const double ab1 = a * params.b1();
  const double ab2 = a * params.b2();
  switch (branch) {
    case Region::Inner:
      // Negative sign: the transform of w(k) is negative for r < b2 - b1, and
      // only with this sign does the branch join the middle one continuously.
      return -params.B() * mod_sph_bessel_i(1, ab1) * mod_sph_bessel_k(1, ab2) * x_i2(x);
    case Region::Middle: {
      const DWaveConstants c = d_wave_constants(params);
      const double bracket =
          x < kPoleFreeBelow ? d_wave_bracket_pole_free(x, c) : d_wave_bracket_closed(x, c);
      return params.B() / (16.0 * ab1 * ab1 * ab2 * ab2) * bracket;
    }
    case Region::Outer:
      break;
  }
  return params.B() * mod_sph_bessel_i(1, ab1) * mod_sph_bessel_i(1, ab2) * x *
         mod_sph_bessel_k(2, x);
}

}  // namespace general

namespace equal_range {

namespace {
double mean_range(const ModelParams& params) { return 0.5 * (params.b1() + params.b2()); }
}  // namespace

double u(Region branch, double r, const ModelParams& params) {
  check_radius(r);
  const double x = params.alpha() * r;
  const double y = params.alpha() * mean_range(params);
  if (branch != Region::Outer) {
    return params.A() / (2.0 * y * y) * (-std::expm1(-x) - std::exp(-2.0 * y) * std::sinh(x));
  }
  const double i0 = mod_sph_bessel_i(0, y);
  return params.A() * i0 * i0 * x * mod_sph_bessel_k(0, x);
}

double w(Region branch, double r, const ModelParams& params) {
  check_radius(r);
  const double x = params.alpha() * r;
  const double y = params.alpha() * mean_range(params);
  if (branch == Region::Outer) {
    const double i1 = mod_sph_bessel_i(1, y);
    return params.B() * i1 * i1 * x * mod_sph_bessel_k(2, x);
  }
  double bracket;
  if (x < kPoleFreeBelow) {
    // 24c/x^2 cancels against the pole of -8c x k2(x), and -4c against its constant
    const ext ye = y;
    const ext xe = x;
    const ext c = 1.0L - ye * ye;
    const ext q = (1.0L + ye) * (1.0L + ye) * std::exp(-2.0L * ye);
    bracket = static_cast<double>(xe * xe - 8.0L * c * xk2_regular_series(xe) -
                                  8.0L * q * xi2_series(xe));
  } else {
    const double c = 1.0 - y * y;
    const double q = (1.0 + y) * (1.0 + y) * std::exp(-2.0 * y);
    bracket = -4.0 * c + x * x + 24.0 * c / (x * x) - 8.0 * c * x * mod_sph_bessel_k(2, x) -
              8.0 * q * x * mod_sph_bessel_i(2, x);
  }
  const double y2 = y * y;
  return params.B() / (16.0 * y2 * y2) * bracket;
}

}  // namespace equal_range

double branch_value(Wave wave, Region branch, double r, const ModelParams& params) {
  if (params.equal_range()) {
    return wave == Wave::S ? equal_range::u(branch, r, params) : equal_range::w(branch, r, params);
  }
  return wave == Wave::S ? general::u(branch, r, params) : general::w(branch, r, params);
}

double u_coordinate(double r, const ModelParams& params) {
  check_radius(r);
  return branch_value(Wave::S, region_of(r, params), r, params);
}

double w_coordinate(double r, const ModelParams& params) {
  check_radius(r);
  return branch_value(Wave::D, region_of(r, params), r, params);
}

RadialSample sample_radial(double r, const ModelParams& params) {
  check_radius(r);
  const Region region = region_of(r, params);
  return {r, branch_value(Wave::S, region, r, params), branch_value(Wave::D, region, r, params),
          region};
}

double branch_derivative(Wave wave, Region branch, double r, const ModelParams& params,
                         quad::Side side, double h0) {
  const quad::Integrand f = [&](double rr) { return branch_value(wave, branch, rr, params); };
  return quad::differentiate_one_sided(f, r, h0, side);
}

namespace {

double active_derivative(Wave wave, double r, const ModelParams& params, double h0) {
  check_radius(r);
  const Region region = region_of(r, params);
  const RegionInterval span = interval_of(region, params);
  const quad::Integrand f = [&](double rr) { return branch_value(wave, region, rr, params); };
  if (r - h0 >= span.lo && r + h0 <= span.hi) return quad::differentiate(f, r, h0);
  const quad::Side side = (r - span.lo < span.hi - r) ? quad::Side::Right : quad::Side::Left;
  double h = h0;
  if (std::isfinite(span.hi)) h = std::min(h, 0.5 * (span.hi - span.lo));
  if (side == quad::Side::Left) h = std::min(h, 0.5 * r);
  return quad::differentiate_one_sided(f, r, h, side);
}

}  // namespace

double du_dr(double r, const ModelParams& params, double h0) {
  return active_derivative(Wave::S, r, params, h0);
}

double dw_dr(double r, const ModelParams& params, double h0) {
  return active_derivative(Wave::D, r, params, h0);
}

}  // namespace deuteron
