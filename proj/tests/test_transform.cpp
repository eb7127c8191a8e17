#include "deuteron/momentum.hpp"
#include "deuteron/observables.hpp"
#include "deuteron/transform.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace deuteron;

namespace {

const ModelParams kReference = make_params(oracle::kB, oracle::kB, oracle::kAlpha, oracle::reference::A,
                                       oracle::reference::B);

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("Yukawa pair") {
  // k^2 f(k) j0(kr) only decays as 1/k here, so the partial sums converge
  // like 1/k_max: the default tolerance is out of reach and the run reports it.
  const double a = oracle::kAlpha;
  const quad::Integrand f = [a](double k) { return kSqrtTwoOverPi / (k * k + a * a); };
  CHECK_THROWS_AS(bessel_transform(0, f, 1.0, 0.0), TransformConvergenceError);
  TransformOptions loose;
  loose.tolerance = 1e-5;
  for (double r : {4.0, 8.0}) {
    CHECK(std::fabs(bessel_transform(0, f, r, 0.0, loose) - std::exp(-a * r)) < 2e-5);
  }
}

TEST_CASE("single points against the analytic branches") {
  const double range = kReference.b1() + kReference.b2();
  const quad::Integrand u_k = [](double k) { return u_momentum(k, kReference); };
  const quad::Integrand w_k = [](double k) { return w_momentum(k, kReference); };
  CHECK(std::fabs(bessel_transform(0, u_k, 4.0, range) - u_coordinate(4.0, kReference)) < 1e-7);
  CHECK(std::fabs(bessel_transform(2, w_k, 0.5, range) - w_coordinate(0.5, kReference)) < 1e-7);
}

TEST_CASE("invalid arguments") {
  const quad::Integrand f = [](double) { return 0.0; };
  CHECK_THROWS_AS(bessel_transform(1, f, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_transform(0, f, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_transform(0, f, -1.0, 0.0), std::domain_error);
  TransformOptions bad;
  bad.panels_per_zero_spacing = 0;
  CHECK_THROWS_AS(bessel_transform(0, f, 1.0, 0.0, bad), std::invalid_argument);
  CHECK_THROWS_AS(validate_transforms(kReference, {0.0, 1.0}), std::domain_error);
}

TEST_CASE("default grid, reference parameters") {
  const TransformReport report = validate_transforms(kReference);
  CHECK(report.points.size() == kDefaultTransformGrid.size());
  CHECK(report.max_abs_dev_u <= 1e-7);
  CHECK(report.max_abs_dev_w <= 1e-7);
}

TEST_CASE("default grid, unequal ranges, all three regions") {
  const ModelParams p = solve_normalisation(1.0, 2.0, oracle::kAlpha, oracle::kRatio);
  const TransformReport report = validate_transforms(p);
  bool seen[3] = {false, false, false};
  for (const TransformPoint& pt : report.points) seen[static_cast<int>(pt.region)] = true;
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
  CHECK(report.max_abs_dev_u <= 1e-7);
  CHECK(report.max_abs_dev_w <= 1e-7);
}

TEST_CASE("zero amplitudes give zero deviations") {
  const TransformReport report = validate_transforms(make_params(1.0, 2.0, oracle::kAlpha, 0.0, 0.0));
  CHECK(report.max_abs_dev_u == 0.0);
  CHECK(report.max_abs_dev_w == 0.0);
}

TEST_CASE("fault injection is visible to the oracle") {
  const BranchEvaluator scaled = [](Wave wave, Region region, double r, const ModelParams& p) {
    const double v = branch_value(wave, region, r, p);
    return wave == Wave::D && region == Region::Middle ? 1.001 * v : v;
  };
  const TransformReport report = validate_transforms(kReference, kDefaultTransformGrid, {}, scaled);
  CHECK(report.max_abs_dev_w > 1e-5);
  CHECK(report.max_abs_dev_u <= 1e-7);
}

TEST_CASE("property: doubling the panel count leaves the transforms unchanged") {
  TransformOptions fine;
  fine.panels_per_zero_spacing = 2;
  for (const ModelParams& p : {kReference, solve_normalisation(0.8, 1.1, oracle::kAlpha, oracle::kRatio)}) {
    const TransformReport coarse = validate_transforms(p);
    const TransformReport refined = validate_transforms(p, kDefaultTransformGrid, fine);
    for (std::size_t i = 0; i < coarse.points.size(); ++i) {
      INFO("r = " << coarse.points[i].r);
      CHECK(std::fabs(coarse.points[i].u_transform - refined.points[i].u_transform) <= 1e-10);
      CHECK(std::fabs(coarse.points[i].w_transform - refined.points[i].w_transform) <= 1e-10);
    }
  }
}

TEST_CASE("property: large-r transforms follow the asymptotic tail") {
  const double a = oracle::kAlpha;
  const AsymptoticNormalisations n = asymptotic_normalisations(kReference);
  const TransformReport report = validate_transforms(kReference, {3.0, 5.0, 8.0, 12.0});
  for (const TransformPoint& pt : report.points) {
    const double x = a * pt.r;
    INFO("r = " << pt.r);
    CHECK(std::fabs(pt.u_transform - n.A_S * std::exp(-x)) <= 1e-7);
    CHECK(std::fabs(pt.w_transform - n.A_D * std::exp(-x) * (1.0 + 3.0 / x + 3.0 / (x * x))) <= 1e-7);
  }
}

}  // TEST_SUITE
