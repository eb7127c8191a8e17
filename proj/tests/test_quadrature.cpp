#include "deuteron/coordinate.hpp"
#include "deuteron/quadrature.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

using namespace deuteron;
using namespace deuteron::quad;

TEST_SUITE("quadrature") {

TEST_CASE("two-point rule") {
  const GaussLegendreRule rule = gauss_legendre_rule(2);
  REQUIRE(rule.nodes.size() == 2);
  CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rule.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(gauss_legendre_rule(1), std::out_of_range);
  CHECK_THROWS_AS(gauss_legendre_rule(129), std::out_of_range);
  CHECK_THROWS_AS(cached_rule(0), std::out_of_range);
  CHECK(&cached_rule(40) == &cached_rule(40));
}

TEST_CASE("property: rules are symmetric, sum to 2 and integrate degree 2n-1 exactly") {
  for (int n : {2, 3, 5, 8, 13, 20, 40, 64, 80, 128}) {
    const GaussLegendreRule& rule = cached_rule(n);
    INFO("n = " << n);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 0; i < n; ++i) {
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[n - 1 - i]).epsilon(1e-15));
      CHECK(rule.weights[i] > 0.0);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    // int_0^1 x^d dx = 1 / (d + 1) for every d <= 2n - 1
    const int top = std::min(2 * n - 1, 60);
    for (int d = 0; d <= top; ++d) {
      const double v = integrate_panel([d](double x) { return std::pow(x, d); }, 0.0, 1.0, rule);
      CHECK(v == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("x^2 on [0, 1] with two points") {
  QuadratureScheme s;
  s.panel_order = 2;
  s.breakpoints = {0.0, 1.0};
  CHECK(integrate_panels([](double x) { return x * x; }, s) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exponential over explicit panels") {
  const double a = oracle::kAlpha;
  QuadratureScheme s;
  s.breakpoints = {0.0, 5.0, 30.0 / a};
  const double v = integrate_panels([a](double r) { return std::exp(-2.0 * a * r); }, s);
  CHECK(v == doctest::Approx(-std::expm1(-60.0) / (2.0 * a)).epsilon(1e-13));
}

TEST_CASE("semi-infinite integrals") {
  CHECK(std::fabs(integrate_semi_infinite([](double r) { return std::exp(-r); }, 0.0, 1.0) - 1.0) <
        1e-12);
  const double a = oracle::kAlpha;
  const double v = integrate_semi_infinite(
      [a](double r) { return r * r * std::exp(-2.0 * a * r); }, 0.0, 2.0 * a);
  CHECK(v == doctest::Approx(2.0 / std::pow(2.0 * a, 3)).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("rational map tail") {
  QuadratureScheme s;
  s.breakpoints = {0.0, 1.0};
  s.tail = RationalMapTail{1.0, 16};
  // int_0^inf dr / (1 + r)^2 = 1
  CHECK(integrate_panels([](double r) { return 1.0 / ((1.0 + r) * (1.0 + r)); }, s) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("invalid schemes") {
  QuadratureScheme s;
  s.breakpoints = {0.0, 2.0, 1.0};
  CHECK_THROWS_AS(integrate_panels([](double) { return 1.0; }, s), std::invalid_argument);
  s.breakpoints = {0.0, 1.0};
  s.panel_order = 1;
  CHECK_THROWS_AS(integrate_panels([](double) { return 1.0; }, s), std::invalid_argument);
  s.panel_order = 40;
  s.tail = TruncateTail{5.0, 0.0};
  CHECK_THROWS_AS(integrate_panels([](double) { return 1.0; }, s), std::invalid_argument);
}

TEST_CASE("non-finite integrand reports the abscissa") {
  QuadratureScheme s;
  s.breakpoints = {1.0, 2.0};
  try {
    integrate_panels([](double x) { return x > 1.5 ? std::numeric_limits<double>::quiet_NaN() : x; }, s);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.abscissa() > 1.5);
    CHECK(e.abscissa() < 2.0);
  }
}

TEST_CASE("central differences") {
  CHECK(std::fabs(differentiate([](double x) { return x * x * x; }, 2.0, 1e-3) - 12.0) < 1e-9);
  CHECK(std::fabs(differentiate([](double x) { return std::exp(x); }, 0.0, 1e-3) - 1.0) < 1e-9);
  CHECK(std::fabs(differentiate([](double x) { return std::sin(x); }, 1.0, 1e-2) - std::cos(1.0)) <
        1e-12);
}

TEST_CASE("one-sided differences stay on their side") {
  for (Side side : {Side::Left, Side::Right}) {
    const double x0 = 1.0;
    const Integrand f = [&](double x) {
      const bool ok = side == Side::Left ? (x <= x0 && x >= x0 - 2e-2) : (x >= x0 && x <= x0 + 2e-2);
      if (!ok) throw std::logic_error("sampled outside the stencil");
      return std::exp(x);
    };
    CHECK(std::fabs(differentiate_one_sided(f, x0, 1e-2, side) - std::exp(1.0)) < 1e-11);
  }
  // exact for polynomials up to degree 5
  const Integrand p = [](double x) { return ((((x - 2.0) * x + 3.0) * x - 1.0) * x + 0.5) * x; };
  const double x = 0.7;
  const double exact = ((((5.0 * x - 8.0) * x + 9.0) * x - 2.0) * x + 0.5);
  CHECK(differentiate_one_sided(p, x, 1e-2, Side::Right) == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("derivative of the equal-range u against its analytic derivative") {
  const double a = oracle::kAlpha;
  const double b = oracle::kB;
  const ModelParams p = make_params(b, b, a, oracle::reference::A, oracle::reference::B);
  // u = A/(2 y^2) (1 - e^{-x} - e^{-2y} sinh x)  =>  du/dr = A a/(2 y^2) (e^{-x} - e^{-2y} cosh x)
  const double y = a * b;
  for (double r : {0.3, 1.0, 2.5}) {
    const double x = a * r;
    const double expected =
        oracle::reference::A * a / (2.0 * y * y) * (std::exp(-x) - std::exp(-2.0 * y) * std::cosh(x));
    const Integrand u = [&](double rr) { return u_coordinate(rr, p); };
    CHECK(oracle::rel(differentiate(u, r, kDerivativeStep), expected) < 1e-8);
  }
}

}  // TEST_SUITE
