#include "deuteron/model.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace deuteron;

TEST_SUITE("model") {

TEST_CASE("reference configuration") {
  const ModelParams p = make_params(1.475, 1.475, 0.23165, 0.905, 1.57);
  CHECK(p.b1() == 1.475);
  CHECK(p.b2() == 1.475);
  CHECK(p.alpha() == 0.23165);
  CHECK(p.A() == 0.905);
  CHECK(p.B() == 1.57);
  CHECK(p.equal_range());
  CHECK(p.outer_boundary() == doctest::Approx(2.95));
}

TEST_CASE("ranges are put in order") {
  const ModelParams p = make_params(2.0, 1.0, 0.2, 1.0, 1.0);
  CHECK(p.b1() == 1.0);
  CHECK(p.b2() == 2.0);
  CHECK(p == make_params(1.0, 2.0, 0.2, 1.0, 1.0));
  CHECK(p == make_params(p.b1(), p.b2(), p.alpha(), p.A(), p.B()));
  CHECK_FALSE(p.equal_range());
  CHECK(p.inner_boundary() == 1.0);
  CHECK(p.outer_boundary() == 3.0);
}

TEST_CASE("invalid parameters are all reported") {
  CHECK_THROWS_AS(make_params(-1.0, 1.0, 0.2, 1.0, 1.0), ValidationError);
  try {
    make_params(-1.0, 0.0, std::numeric_limits<double>::quiet_NaN(), -2.0, 1.0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.problems().size() == 4);
  }
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, std::numeric_limits<double>::infinity(), 0.2, 1.0, 1.0),
                  ValidationError);
  CHECK_NOTHROW(make_params(1.0, 1.0, 0.2, 0.0, 0.0));
}

TEST_CASE("with_normalisation keeps the shape") {
  const ModelParams p = make_params(1.0, 2.0, 0.2, 1.0, 1.0).with_normalisation(0.5, 0.7);
  CHECK(p.b1() == 1.0);
  CHECK(p.b2() == 2.0);
  CHECK(p.A() == 0.5);
  CHECK(p.B() == 0.7);
  CHECK_THROWS_AS(p.with_normalisation(-1.0, 0.0), ValidationError);
}

TEST_CASE("potential strengths") {
  const PotentialStrengths s = make_strengths(2.0, 3.0);
  CHECK(s.lambdaC_over_M == 2.0);
  CHECK(s.lambdaT_over_M == 3.0);
  CHECK_THROWS_AS(make_strengths(0.0, 1.0), ValidationError);
}

TEST_CASE("regions") {
  const ModelParams p = make_params(1.0, 2.0, 0.23165, 1.0, 1.0);
  CHECK(region_of(0.0, p) == Region::Inner);
  CHECK(region_of(1.5, p) == Region::Middle);
  CHECK(region_of(4.0, p) == Region::Outer);
  // boundary points belong to the lower region
  CHECK(region_of(1.0, p) == Region::Inner);
  CHECK(region_of(3.0, p) == Region::Middle);
  CHECK(to_string(Region::Inner) == "inner");
  CHECK(to_string(Region::Middle) == "middle");
  CHECK(to_string(Region::Outer) == "outer");

  const RegionInterval mid = interval_of(Region::Middle, p);
  CHECK(mid.lo == 1.0);
  CHECK(mid.hi == 3.0);
  CHECK(std::isinf(interval_of(Region::Outer, p).hi));
}

TEST_CASE("equal range has no inner region") {
  const ModelParams p = make_params(1.475, 1.475, 0.23165, 1.0, 1.0);
  CHECK(region_of(0.0, p) == Region::Middle);
  CHECK(region_of(2.95, p) == Region::Middle);
  CHECK(region_of(2.96, p) == Region::Outer);
  const RegionInterval inner = interval_of(Region::Inner, p);
  CHECK(inner.lo == inner.hi);

  // separations below the region epsilon count as equal
  CHECK(make_params(1.0, 1.0 + 0.5 * kRegionEpsilon, 0.2, 1.0, 1.0).equal_range());
  CHECK_FALSE(make_params(1.0, 1.0 + 1e-6, 0.2, 1.0, 1.0).equal_range());
}

TEST_CASE("property: region_of is monotone in r") {
  oracle::Gen gen(11);
  for (int n = 0; n < 200; ++n) {
    const double b1 = gen.uniform(0.1, 3.0);
    const double b2 = n % 4 == 0 ? b1 : gen.uniform(0.1, 3.0);
    const ModelParams p = make_params(b1, b2, gen.uniform(0.05, 1.0), 1.0, 1.0);
    int previous = 0;
    for (int i = 0; i <= 400; ++i) {
      const int current = static_cast<int>(region_of(0.02 * i, p));
      if (current < previous) FAIL("region order reversed for b1 = " << b1 << ", b2 = " << b2);
      previous = current;
    }
  }
}

}  // TEST_SUITE
