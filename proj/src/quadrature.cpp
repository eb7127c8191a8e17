#include "deuteron/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace deuteron::quad {

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 2 || n > 128) {
    throw std::out_of_range("Gauss-Legendre order must be in [2, 128], got " +
                            std::to_string(n));
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // derivative at the converged node
    double p0 = 1.0;
    double p1 = z;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussLegendreRule& cached_rule(int n) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<const GaussLegendreRule>, 129> cache;
  if (n < 2 || n > 128) {
    throw std::out_of_range("Gauss-Legendre order must be in [2, 128], got " +
                            std::to_string(n));
  }
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n] = std::make_unique<const GaussLegendreRule>(gauss_legendre_rule(n));
  return *cache[n];
}

double integrate_panel(const Integrand& f, double lo, double hi, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = mid + half * rule.nodes[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw QuadratureError("integrand is not finite at x = " + std::to_string(x), x);
    }
    sum += rule.weights[i] * fx;
  }
  return half * sum;
}

double integrate_panels(const Integrand& f, const QuadratureScheme& scheme) {
  if (scheme.panel_order < 2) throw std::invalid_argument("panel_order must be >= 2");
  const auto& bp = scheme.breakpoints;
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (!(bp[i] > bp[i - 1])) throw std::invalid_argument("breakpoints must be strictly increasing");
  }
  const GaussLegendreRule& rule = cached_rule(scheme.panel_order);

  double total = 0.0;
  for (std::size_t i = 1; i < bp.size(); ++i) total += integrate_panel(f, bp[i - 1], bp[i], rule);

  if (const auto* trunc = std::get_if<TruncateTail>(&scheme.tail)) {
    if (bp.empty()) throw std::invalid_argument("tail policy needs at least one breakpoint");
    if (!(trunc->panel_width > 0.0)) throw std::invalid_argument("tail panel width must be > 0");
    double lo = bp.back();
    while (lo < trunc->limit) {
      const double hi = std::min(lo + trunc->panel_width, trunc->limit);
      total += integrate_panel(f, lo, hi, rule);
      lo = hi;
    }
  } else if (const auto* map = std::get_if<RationalMapTail>(&scheme.tail)) {
    if (bp.empty()) throw std::invalid_argument("tail policy needs at least one breakpoint");
    if (!(map->scale > 0.0) || map->panels < 1) throw std::invalid_argument("invalid rational tail map");
    const double r0 = bp.back();
    const double scale = map->scale;
    // dr = scale / (1 - t)^2 dt; the Gauss nodes never touch t = 1
    const Integrand mapped = [&](double t) {
      const double one_minus = 1.0 - t;
      const double r = r0 + scale * t / one_minus;
      const double jac = scale / (one_minus * one_minus);
      const double fr = f(r);
      return fr == 0.0 ? 0.0 : fr * jac;
    };
    for (int p = 0; p < map->panels; ++p) {
      const double t0 = static_cast<double>(p) / map->panels;
      const double t1 = static_cast<double>(p + 1) / map->panels;
      total += integrate_panel(mapped, t0, t1, rule);
    }
  }
  return total;
}

double integrate_semi_infinite(const Integrand& f, double start, double decay_alpha,
                               int panel_order) {
  if (!(decay_alpha > 0.0)) throw std::invalid_argument("decay_alpha must be > 0");
  QuadratureScheme scheme;
  scheme.panel_order = panel_order;
  scheme.breakpoints = {start};
  scheme.tail = TruncateTail{start + kTailDecayLengths / decay_alpha, 1.0 / decay_alpha};
  return integrate_panels(f, scheme);
}

double differentiate(const Integrand& f, double x, double h0) {
  auto central = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  const double d1 = central(h0);
  const double d2 = central(0.5 * h0);
  const double d4 = central(0.25 * h0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double differentiate_one_sided(const Integrand& f, double x, double h0, Side side) {
  const double s = side == Side::Right ? 1.0 : -1.0;
  const double f0 = f(x);
  auto one_sided = [&](double h) {
    return s * (-3.0 * f0 + 4.0 * f(x + s * h) - f(x + 2.0 * s * h)) / (2.0 * h);
  };
  // steps h0 .. h0/8 keep every sample inside [x, x + 2 h0]
  const double d1 = one_sided(h0);
  const double d2 = one_sided(0.5 * h0);
  const double d4 = one_sided(0.25 * h0);
  const double d8 = one_sided(0.125 * h0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  const double r3 = (4.0 * d8 - d4) / 3.0;
  const double t1 = (8.0 * r2 - r1) / 7.0;
  const double t2 = (8.0 * r3 - r2) / 7.0;
  return (16.0 * t2 - t1) / 15.0;
}

}  // namespace deuteron::quad
