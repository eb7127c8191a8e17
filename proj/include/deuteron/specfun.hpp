#pragma once

// Spherical Bessel functions j_l and modified spherical Bessel functions
// i_l, k_l for l = 0, 1, 2.
//
// Closed forms lose roughly 2*log10(1/x) digits for j_1, j_2, i_1, i_2 as
// x -> 0 (the leading terms cancel), so below small_arg_threshold the
// ascending series
//
//     j_l(x) = x^l sum_n (-x^2/2)^n / (n! (2n+2l+1)!!)
//     i_l(x) = x^l sum_n (+x^2/2)^n / (n! (2n+2l+1)!!)
//
// is used instead. k_l has no cancellation and is always evaluated in
// closed form.

namespace deuteron::specfun {

struct SpecialFunctionPolicy {
  double small_arg_threshold = 0.5;
  int series_terms = 12;
};

inline constexpr SpecialFunctionPolicy kDefaultPolicy{};

double sph_bessel_j(int l, double x);
double mod_sph_bessel_i(int l, double x);
double mod_sph_bessel_k(int l, double x);

// Individual evaluation routes, exposed so the switch between them can be
// tested. Neither checks the threshold.
double sph_bessel_j_series(int l, double x, int terms = kDefaultPolicy.series_terms);
double mod_sph_bessel_i_series(int l, double x, int terms = kDefaultPolicy.series_terms);
double sph_bessel_j_closed(int l, double x);
double mod_sph_bessel_i_closed(int l, double x);

// Magnitude of the first omitted series term relative to the leading term,
// at argument x. Used to certify the truncation bound of the policy.
double series_truncation_ratio(int l, double x, int terms);

}  // namespace deuteron::specfun
