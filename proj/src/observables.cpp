#include "deuteron/observables.hpp"

#include "deuteron/coordinate.hpp"
#include "deuteron/momentum.hpp"
#include "deuteron/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace deuteron {

namespace {

// Neumaier-compensated sum
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// coefficient of y^n in p(y) exp(c y)
long double poly_exp_coefficient(const long double* p, int degree, long double c, int n) {
  long double total = 0.0L;
  for (int j = 0; j <= degree && j <= n; ++j) {
    long double term = p[j];
    for (int m = 1; m <= n - j; ++m) term *= c / m;
    total += term;
  }
  return total;
}

constexpr int kSeriesTerms = 40;

void require_equal_range(const ModelParams& params) {
  if (!params.equal_range()) {
    throw std::domain_error("closed-form probabilities need b1 = b2");
  }
}

double mean_range(const ModelParams& params) { return 0.5 * (params.b1() + params.b2()); }

}  // namespace

std::string_view to_string(ProbabilityPath path) {
  return path == ProbabilityPath::Closed ? "closed" : "numeric";
}

// S(y) = 8y - 9 + 4 e^{-2y} (2y + 3) - e^{-4y} (4y + 3)
double prob_S_bracket_coefficient(int n) {
  if (n < 4) return 0.0;  // vanishes identically
  static constexpr long double kP1[] = {12.0L, 8.0L};  // 4 (2y + 3)
  static constexpr long double kP2[] = {3.0L, 4.0L};   // (4y + 3)
  return static_cast<double>(poly_exp_coefficient(kP1, 1, -2.0L, n) -
                             poly_exp_coefficient(kP2, 1, -4.0L, n));
}

// T(y) = 56y^5 - 135y^4 - 80y^3 + 450y^2 - 315
//        - 60 (y+1)^2 (2y^3 + 3y^2 - 7) e^{-2y} - 15 (y+1)^3 (4y^2 + 7y + 7) e^{-4y}
double prob_D_bracket_coefficient(int n) {
  if (n < 9) return 0.0;  // vanishes identically
  // (y+1)^2 (2y^3 + 3y^2 - 7) and (y+1)^3 (4y^2 + 7y + 7), ascending powers
  static constexpr long double kP1[] = {-7.0L, -14.0L, -4.0L, 8.0L, 7.0L, 2.0L};
  static constexpr long double kP2[] = {7.0L, 28.0L, 46.0L, 40.0L, 19.0L, 4.0L};
  return static_cast<double>(-60.0L * poly_exp_coefficient(kP1, 5, -2.0L, n) -
                             15.0L * poly_exp_coefficient(kP2, 5, -4.0L, n));
}

double prob_S_bracket_series(double y) {
  static const auto coeffs = [] {
    std::array<double, kSeriesTerms> c{};
    for (int n = 0; n < kSeriesTerms; ++n) c[n] = prob_S_bracket_coefficient(n);
    return c;
  }();
  double sum = 0.0;
  for (int n = kSeriesTerms - 1; n >= 4; --n) sum = sum * y + coeffs[n];
  return sum * std::pow(y, 4);
}

double prob_D_bracket_series(double y) {
  static const auto coeffs = [] {
    std::array<double, kSeriesTerms> c{};
    for (int n = 0; n < kSeriesTerms; ++n) c[n] = prob_D_bracket_coefficient(n);
    return c;
  }();
  double sum = 0.0;
  for (int n = kSeriesTerms - 1; n >= 9; --n) sum = sum * y + coeffs[n];
  return sum * std::pow(y, 9);
}

double prob_S_bracket_closed(double y) {
  const double e2 = std::exp(-2.0 * y);
  const double e4 = std::exp(-4.0 * y);
  CompensatedSum s;
  s.add(8.0 * y);
  s.add(-9.0);
  s.add(8.0 * y * e2);
  s.add(12.0 * e2);
  s.add(-4.0 * y * e4);
  s.add(-3.0 * e4);
  return s.value();
}

double prob_D_bracket_closed(double y) {
  const double y2 = y * y;
  const double y3 = y2 * y;
  const double y4 = y2 * y2;
  const double y5 = y4 * y;
  const double e2 = std::exp(-2.0 * y);
  const double e4 = std::exp(-4.0 * y);
  CompensatedSum s;
  s.add(56.0 * y5);
  s.add(-135.0 * y4);
  s.add(-80.0 * y3);
  s.add(450.0 * y2);
  s.add(-315.0);
  // expanded polynomial coefficients of the two exponential terms
  static constexpr double kP1[] = {-7.0, -14.0, -4.0, 8.0, 7.0, 2.0};
  static constexpr double kP2[] = {7.0, 28.0, 46.0, 40.0, 19.0, 4.0};
  const double powers[] = {1.0, y, y2, y3, y4, y5};
  for (int j = 0; j < 6; ++j) {
    s.add(-60.0 * kP1[j] * powers[j] * e2);
    s.add(-15.0 * kP2[j] * powers[j] * e4);
  }
  return s.value();
}

double prob_S_bracket(double y) {
  return y < kProbSSeriesBelow ? prob_S_bracket_series(y) : prob_S_bracket_closed(y);
}

double prob_D_bracket(double y) {
  return y < kProbDSeriesBelow ? prob_D_bracket_series(y) : prob_D_bracket_closed(y);
}

double prob_S_closed(const ModelParams& params) {
  require_equal_range(params);
  const double a = params.alpha();
  const double b = mean_range(params);
  const double y = a * b;
  return params.A() * params.A() / (16.0 * a * y * y * y * y) * prob_S_bracket(y);
}

double prob_D_closed(const ModelParams& params) {
  require_equal_range(params);
  const double a = params.alpha();
  const double b = mean_range(params);
  const double y = a * b;
  const double y4 = y * y * y * y;
  return params.B() * params.B() / (240.0 * a * y4 * y4) * prob_D_bracket(y);
}

namespace {

// Tail beyond the returned k is below tail_target: |j0(x)| <= 1/x and
// |j1(x)| <= 2/x for x >= 1 bound the integrand by c / (b1^2 b2^2 k^6).
double momentum_cutoff(const ModelParams& params, double envelope, double tail_target) {
  const double b1 = params.b1();
  const double b2 = params.b2();
  const double coeff = (2.0 / std::numbers::pi) * envelope / (5.0 * b1 * b1 * b2 * b2);
  return std::max(1.0 / b1, std::pow(coeff / tail_target, 0.2));
}

double momentum_probability(const ModelParams& params, double (*amplitude)(double, const ModelParams&),
                            double envelope, int panel_order) {
  const double spacing = std::numbers::pi / params.b2();
  const double k_cut = momentum_cutoff(params, envelope, 1e-13);
  quad::QuadratureScheme scheme;
  scheme.panel_order = panel_order;
  const long panels = static_cast<long>(std::ceil(k_cut / spacing));
  // the first panel is graded towards k = 0: for small b2 the propagator peak
  // (width alpha) is much narrower than pi / b2
  scheme.breakpoints.push_back(0.0);
  for (int level = 6; level > 0; --level) scheme.breakpoints.push_back(std::ldexp(spacing, -level));
  for (long i = 1; i <= panels; ++i) scheme.breakpoints.push_back(i * spacing);
  const quad::Integrand f = [&](double k) {
    const double v = amplitude(k, params);
    return k * k * v * v;
  };
  return quad::integrate_panels(f, scheme);
}

}  // namespace

double prob_S_numeric(const ModelParams& params, int panel_order) {
  return momentum_probability(params, &u_momentum, params.A() * params.A(), panel_order);
}

double prob_D_numeric(const ModelParams& params, int panel_order) {
  return momentum_probability(params, &w_momentum, 16.0 * params.B() * params.B(), panel_order);
}

quad::QuadratureScheme radial_scheme(const ModelParams& params, int panel_order) {
  constexpr double kMaxPanelWidth = 1.0;  // fm
  quad::QuadratureScheme scheme;
  scheme.panel_order = panel_order;
  std::vector<double> edges{0.0};
  if (!params.equal_range()) edges.push_back(params.inner_boundary());
  edges.push_back(params.outer_boundary());
  scheme.breakpoints.push_back(0.0);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double width = edges[i] - edges[i - 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil(width / kMaxPanelWidth)));
    for (int p = 1; p < pieces; ++p) scheme.breakpoints.push_back(edges[i - 1] + width * p / pieces);
    scheme.breakpoints.push_back(edges[i]);
  }
  const double decay = 2.0 * params.alpha();
  scheme.tail = quad::TruncateTail{params.outer_boundary() + quad::kTailDecayLengths / decay,
                                   1.0 / decay};
  return scheme;
}

double norm_S_coordinate(const ModelParams& params, int panel_order) {
  const quad::Integrand f = [&](double r) {
    const double u = u_coordinate(r, params);
    return u * u;
  };
  return quad::integrate_panels(f, radial_scheme(params, panel_order));
}

double norm_D_coordinate(const ModelParams& params, int panel_order) {
  const quad::Integrand f = [&](double r) {
    const double w = w_coordinate(r, params);
    return w * w;
  };
  return quad::integrate_panels(f, radial_scheme(params, panel_order));
}

ModelParams solve_normalisation(double b1, double b2, double alpha, double ratio) {
  if (!std::isfinite(ratio) || ratio < 0.0) {
    throw ValidationError({"ratio B^2/A^2 must be finite and >= 0"});
  }
  const ModelParams unit = make_params(b1, b2, alpha, 1.0, 1.0);
  double p_s;
  double p_d;
  if (unit.equal_range()) {
    p_s = prob_S_closed(unit);
    p_d = prob_D_closed(unit);
  } else {
    p_s = prob_S_numeric(unit);
    p_d = prob_D_numeric(unit);
  }
  const double denom = p_s + ratio * p_d;
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw std::runtime_error("degenerate normalisation: p_S + ratio p_D <= 0");
  }
  const double A = 1.0 / std::sqrt(denom);
  return unit.with_normalisation(A, std::sqrt(ratio) * A);
}

AsymptoticNormalisations asymptotic_normalisations(const ModelParams& params) {
  const double ab1 = params.alpha() * params.b1();
  const double ab2 = params.alpha() * params.b2();
  return {params.A() * specfun::mod_sph_bessel_i(0, ab1) * specfun::mod_sph_bessel_i(0, ab2),
          params.B() * specfun::mod_sph_bessel_i(1, ab1) * specfun::mod_sph_bessel_i(1, ab2)};
}

double ds_ratio(const ModelParams& params) {
  const auto [a_s, a_d] = asymptotic_normalisations(params);
  if (a_s == 0.0) throw std::domain_error("D/S ratio undefined for A_S = 0");
  return a_d / a_s;
}

double rms_radius(const ModelParams& params, int panel_order) {
  const quad::Integrand f = [&](double r) {
    const RadialSample s = sample_radial(r, params);
    return r * r * (s.u * s.u + s.w * s.w);
  };
  return 0.5 * std::sqrt(quad::integrate_panels(f, radial_scheme(params, panel_order)));
}

double quadrupole_moment(const ModelParams& params, int panel_order) {
  const double sqrt8 = 2.0 * std::numbers::sqrt2;
  const quad::Integrand f = [&](double r) {
    const RadialSample s = sample_radial(r, params);
    return r * r * s.w * (sqrt8 * s.u - s.w);
  };
  return quad::integrate_panels(f, radial_scheme(params, panel_order)) / 20.0;
}

ObservablesReport report(const ModelParams& params) {
  ObservablesReport out;
  if (params.equal_range()) {
    out.path = ProbabilityPath::Closed;
    out.P_S = prob_S_closed(params);
    out.P_D = prob_D_closed(params);
  } else {
    out.path = ProbabilityPath::Numeric;
    out.P_S = prob_S_numeric(params);
    out.P_D = prob_D_numeric(params);
  }
  const auto asym = asymptotic_normalisations(params);
  out.A_S = asym.A_S;
  out.A_D = asym.A_D;
  if (out.A_S != 0.0) {
    out.eta = out.A_D / out.A_S;
  } else {
    out.warnings.push_back("A_S = 0: D/S ratio undefined, reported as 0");
  }
  out.r_rms = rms_radius(params);
  out.Q = quadrupole_moment(params);
  const double total = out.P_S + out.P_D;
  if (std::abs(total - 1.0) > kNormalisationWarning) {
    out.warnings.push_back("wavefunction not normalised: P_S + P_D = " + std::to_string(total));
  }
  return out;
}

}  // namespace deuteron
