#pragma once

#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace deuteron::quad {

using Integrand = std::function<double(double)>;

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, on [-1, 1]
  std::vector<double> weights;
};

// n-point rule by Newton iteration on P_n. 2 <= n <= 128.
GaussLegendreRule gauss_legendre_rule(int n);

// Shared immutable copy of gauss_legendre_rule(n), computed once per n.
const GaussLegendreRule& cached_rule(int n);

// Extend the last breakpoint with panels of width panel_width up to limit.
struct TruncateTail {
  double limit;
  double panel_width;
};

// Map [last breakpoint, inf) onto t in [0, 1) through r = r0 + scale t / (1 - t)
// and integrate `panels` equal panels in t.
struct RationalMapTail {
  double scale;
  int panels = 16;
};

using TailPolicy = std::variant<std::monostate, TruncateTail, RationalMapTail>;

struct QuadratureScheme {
  int panel_order = 40;
  std::vector<double> breakpoints;  // strictly increasing
  TailPolicy tail{};
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

// Integral of f over [lo, hi] with one mapped Gauss-Legendre panel.
double integrate_panel(const Integrand& f, double lo, double hi, const GaussLegendreRule& rule);

double integrate_panels(const Integrand& f, const QuadratureScheme& scheme);

// Integral over [start, inf) of an integrand bounded by C exp(-decay r) poly(r).
// Truncated at start + kTailDecayLengths / decay with panels one decay length wide;
// the neglected tail is of order exp(-40) times the polynomial factor.
inline constexpr double kTailDecayLengths = 40.0;
double integrate_semi_infinite(const Integrand& f, double start, double decay_alpha,
                               int panel_order = 40);

// Central difference at x with two Richardson levels (steps h0, h0/2, h0/4).
// f is sampled on [x - h0, x + h0] only. Error O(h0^6).
double differentiate(const Integrand& f, double x, double h0);

enum class Side { Left, Right };

// One-sided derivative sampling only [x - 2h0, x] (Left) or [x, x + 2h0] (Right):
// three-point one-sided differences with Richardson elimination of the h^2,
// h^3 and h^4 error terms.
double differentiate_one_sided(const Integrand& f, double x, double h0, Side side);

}  // namespace deuteron::quad
