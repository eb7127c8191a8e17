#include "deuteron/transform.hpp"

#include "deuteron/momentum.hpp"
#include "deuteron/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace deuteron {

namespace {
constexpr int kFirstPanelGrading = 6;
}  // namespace

double bessel_transform(int l, const quad::Integrand& f_of_k, double r, double range_scale,
                        const TransformOptions& options) {
  if (l != 0 && l != 2) throw std::domain_error("transform order must be 0 or 2");
  if (!std::isfinite(r) || r <= 0.0) throw std::domain_error("transform radius must be > 0");
  if (options.panels_per_zero_spacing < 1) throw std::invalid_argument("panels_per_zero_spacing must be >= 1");

  const double spacing = std::numbers::pi / (r + range_scale);
  const int pieces = options.panels_per_zero_spacing;
  const quad::GaussLegendreRule& rule = quad::cached_rule(options.panel_order);
  const quad::Integrand integrand = [&](double k) {
    return k * k * f_of_k(k) * specfun::sph_bessel_j(l, k * r);
  };
  auto integrate = [&](double lo, double hi) {
    double s = 0.0;
    const double width = (hi - lo) / pieces;
    for (int i = 0; i < pieces; ++i) {
      s += quad::integrate_panel(integrand, lo + i * width, lo + (i + 1) * width, rule);
    }
    return s;
  };

  // integrate panel by panel up to at least k_hi; panel edges are always
  // multiples of the zero spacing, whatever the subdivision
  auto extend = [&](double& sum, long& panel, double k_hi) {
    while (panel * spacing < k_hi) {
      if (panel == 0) {
        // graded towards k = 0, where a propagator peak of width alpha can be
        // much narrower than the zero spacing
        double lo = 0.0;
        for (int level = kFirstPanelGrading; level >= 0; --level) {
          const double hi = std::ldexp(spacing, -level);
          sum += integrate(lo, hi);
          lo = hi;
        }
      } else {
        sum += integrate(panel * spacing, (panel + 1) * spacing);
      }
      ++panel;
    }
  };

  const double prefactor = kSqrtTwoOverPi * r;
  double sum = 0.0;
  long panel = 0;
  double k_max = options.k_max;
  extend(sum, panel, k_max);
  double previous = prefactor * sum;
  for (int doubling = 0; doubling < options.max_doublings; ++doubling) {
    k_max *= 2.0;
    extend(sum, panel, k_max);
    const double current = prefactor * sum;
    if (std::abs(current - previous) <= options.tolerance) return current;
    previous = current;
  }
  throw TransformConvergenceError("Bessel transform (l = " + std::to_string(l) +
                                  ") did not converge at r = " + std::to_string(r) +
                                  " up to k_max = " + std::to_string(k_max));
}

TransformReport validate_transforms(const ModelParams& params, const std::vector<double>& r_grid,
                                    const TransformOptions& options,
                                    const BranchEvaluator& analytic) {
  TransformReport report;
  report.r_grid = r_grid;
  const double range_scale = params.b1() + params.b2();
  const quad::Integrand u_k = [&](double k) { return u_momentum(k, params); };
  const quad::Integrand w_k = [&](double k) { return w_momentum(k, params); };
  for (double r : r_grid) {
    if (!std::isfinite(r) || r <= 0.0) throw std::domain_error("transform grid points must be > 0");
    TransformPoint pt{};
    pt.r = r;
    pt.region = region_of(r, params);
    pt.u_transform = bessel_transform(0, u_k, r, range_scale, options);
    pt.w_transform = bessel_transform(2, w_k, r, range_scale, options);
    pt.u_analytic = analytic(Wave::S, pt.region, r, params);
    pt.w_analytic = analytic(Wave::D, pt.region, r, params);
    pt.dev_u = std::abs(pt.u_transform - pt.u_analytic);
    pt.dev_w = std::abs(pt.w_transform - pt.w_analytic);
    report.max_abs_dev_u = std::max(report.max_abs_dev_u, pt.dev_u);
    report.max_abs_dev_w = std::max(report.max_abs_dev_w, pt.dev_w);
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace deuteron
