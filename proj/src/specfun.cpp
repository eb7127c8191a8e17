#include "deuteron/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace deuteron::specfun {

namespace {

void check_order(int l) {
  if (l < 0 || l > 2) {
    throw std::domain_error("spherical Bessel order must be 0, 1 or 2, got " +
                            std::to_string(l));
  }
}

void check_argument(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("spherical Bessel argument must be finite and >= 0");
  }
}

// (2l+1)!! for l in {0,1,2}
double double_factorial_odd(int l) {
  static constexpr double kTable[] = {1.0, 3.0, 15.0};
  return kTable[l];
}

// x^l sum_n (sign x^2/2)^n / (n! (2n+2l+1)!!), summed from the smallest term up.
double ascending_series(int l, double x, int terms, double sign) {
  const double z = sign * 0.5 * x * x;
  double term = 1.0 / double_factorial_odd(l);
  double sum = 0.0;
  // terms are generated forwards and accumulated backwards
  double buffer[64];
  const int n_terms = terms < 1 ? 1 : (terms > 64 ? 64 : terms);
  for (int n = 0; n < n_terms; ++n) {
    buffer[n] = term;
    term *= z / ((n + 1) * (2.0 * n + 2.0 * l + 3.0));
  }
  for (int n = n_terms - 1; n >= 0; --n) sum += buffer[n];
  return std::pow(x, l) * sum;
}

}  // namespace

double sph_bessel_j_series(int l, double x, int terms) {
  check_order(l);
  return ascending_series(l, x, terms, -1.0);
}

double mod_sph_bessel_i_series(int l, double x, int terms) {
  check_order(l);
  return ascending_series(l, x, terms, +1.0);
}

// The l = 1, 2 closed forms cancel down to x^l from terms of order 1/x^2; at
// the series threshold that is ~700 ulp for l = 2. Evaluating them in long
// double keeps the switch between the two routes below 1e-13.
double sph_bessel_j_closed(int l, double x) {
  check_order(l);
  const long double xl = x;
  const long double s = std::sin(xl);
  const long double c = std::cos(xl);
  switch (l) {
    case 0:
      return static_cast<double>(s / xl);
    case 1:
      return static_cast<double>((s - xl * c) / (xl * xl));
    default:
      return static_cast<double>(((3.0L - xl * xl) * s - 3.0L * xl * c) / (xl * xl * xl));
  }
}

double mod_sph_bessel_i_closed(int l, double x) {
  check_order(l);
  const long double xl = x;
  const long double sh = std::sinh(xl);
  const long double ch = std::cosh(xl);
  switch (l) {
    case 0:
      return static_cast<double>(sh / xl);
    case 1:
      return static_cast<double>((xl * ch - sh) / (xl * xl));
    default:
      return static_cast<double>(((xl * xl + 3.0L) * sh - 3.0L * xl * ch) / (xl * xl * xl));
  }
}

double series_truncation_ratio(int l, double x, int terms) {
  check_order(l);
  const double z = 0.5 * x * x;
  double ratio = 1.0;
  for (int n = 0; n < terms; ++n) ratio *= z / ((n + 1) * (2.0 * n + 2.0 * l + 3.0));
  return ratio;
}

double sph_bessel_j(int l, double x) {
  check_order(l);
  check_argument(x);
  if (x < kDefaultPolicy.small_arg_threshold) return sph_bessel_j_series(l, x);
  return sph_bessel_j_closed(l, x);
}

double mod_sph_bessel_i(int l, double x) {
  check_order(l);
  check_argument(x);
  if (x < kDefaultPolicy.small_arg_threshold) return mod_sph_bessel_i_series(l, x);
  return mod_sph_bessel_i_closed(l, x);
}

double mod_sph_bessel_k(int l, double x) {
  check_order(l);
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("modified spherical Bessel k_l requires finite x > 0");
  }
  const double e = std::exp(-x);
  switch (l) {
    case 0:
      return e / x;
    case 1:
      return e * (x + 1.0) / (x * x);
    default:
      return e * ((x + 3.0) * x + 3.0) / (x * x * x);
  }
}

}  // namespace deuteron::specfun
