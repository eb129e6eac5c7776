#include <cmath>

#include <doctest.h>

#include "quadmap/green.hpp"

using namespace quadmap;

namespace {
const Params kP11{{1, 0}, {1, 0}};
const Params kP15{{1, 0}, {1.5, 0}};
}  // namespace

TEST_CASE("green_plus at the origin is unresolved zero") {
  const RegionConstants c = choose_constants(kP11);
  const GreenEstimate g = green_plus(kP11, c, Point3::from_complex(0, 0, 0), 1e-8, 100);
  CHECK(g.value == 0.0);
  CHECK(g.horizon_limited);
  CHECK_FALSE(g.converged);
}

TEST_CASE("green_plus deep in the forward trap") {
  const RegionConstants c = choose_constants(kP11);
  const GreenEstimate g =
      green_plus(kP11, c, Point3::from_complex(1e4, 1e4, 1), 1e-8, 100);
  CHECK(g.converged);
  // leading order (2 ln|x| + ln|y|)/3 for |x| = |y| = 1e4
  CHECK(g.value == doctest::Approx(9.2103).epsilon(0.0011));
}

TEST_CASE("green_plus on a late escaper") {
  const RegionConstants c = choose_constants(kP11);
  const GreenEstimate g = green_plus(kP11, c, Point3::from_complex(2, 2, 1), 1e-8, 100);
  CHECK(g.converged);
  CHECK(g.value > 0.0);
}

TEST_CASE("green_minus on a backward escaper") {
  const RegionConstants c = choose_constants(kP15);
  const GreenEstimate g =
      green_minus(kP15, c, Point3::from_complex(1, 4, 100), 1e-8, 100);
  CHECK(g.converged);
  // leading order ln|z| - ln|ab|/2
  CHECK(g.value == doctest::Approx(std::log(100.0) - 0.5 * std::log(1.5)).epsilon(0.07));
}

TEST_CASE("green_minus is unresolved on the bounded backward line x=z=0") {
  const Params p{{1, 0}, {2, 0}};
  const RegionConstants c = choose_constants(p);
  const GreenEstimate g = green_minus(p, c, Point3::from_complex(0, 5, 0), 1e-8, 200);
  CHECK(g.value == 0.0);
  CHECK(g.horizon_limited);
}

TEST_CASE("green functional equations at spot points") {
  const RegionConstants c = choose_constants(kP11);
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  const double g = green_plus(kP11, c, w, 1e-8, 100).value;
  const double gh = green_plus(kP11, c, forward_step(kP11, w), 1e-8, 100).value;
  CHECK(std::abs(gh - 2.0 * g) <= 1e-7);

  const RegionConstants c15 = choose_constants(kP15);
  const Point3 v = Point3::from_complex(1, 4, 100);
  const double gm = green_minus(kP15, c15, v, 1e-8, 100).value;
  const double gmh = green_minus(kP15, c15, inverse_step(kP15, v), 1e-8, 100).value;
  CHECK(std::abs(gmh - 3.0 * gm) <= 1e-7);
}

TEST_CASE("forward channel agreement |x| vs sup norm") {
  // the |y| channel converges to the same limit: ln|y_{n+1}| = 2 ln|x_n| + o(1)
  const RegionConstants c = choose_constants(kP11);
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  const GreenEstimate gx = green_plus(kP11, c, w, 1e-10, 100);
  Point3 cur = w;
  double weight = 1.0;
  for (int n = 0; n < 25; ++n) {
    cur = forward_step(kP11, cur);
    weight /= 2.0;
  }
  const double gy = weight * ext_log_mag(cur.y).as_double();
  const double gsup = weight * cur.log_sup().as_double();
  CHECK(gx.value == doctest::Approx(gy).epsilon(1e-6));
  CHECK(gx.value == doctest::Approx(gsup).epsilon(1e-6));
}

TEST_CASE("green_lifted at the lift fixed point") {
  const GreenEstimate g = green_lifted(
      kP11, ProjPoint::from_affine(Point3::from_complex(0, 0, 0)), Direction::Forward,
      1e-8, 100);
  CHECK(g.converged);
  CHECK(g.value == doctest::Approx(0.0));
}

TEST_CASE("lifted forward estimate agrees with the affine one") {
  const RegionConstants c = choose_constants(kP11);
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  const GreenEstimate affine = green_plus(kP11, c, w, 1e-9, 100);
  const GreenEstimate lifted =
      green_lifted(kP11, ProjPoint::from_affine(w), Direction::Forward, 1e-9, 100);
  CHECK(lifted.converged);
  CHECK(std::abs(lifted.value - affine.value) <= 1e-6);
}

TEST_CASE("lifted backward estimate carries the ln|ab|/2 clearing shift") {
  const RegionConstants c = choose_constants(kP15);
  const Point3 w = Point3::from_complex(1, 4, 100);
  const GreenEstimate affine = green_minus(kP15, c, w, 1e-9, 100);
  const GreenEstimate lifted =
      green_lifted(kP15, ProjPoint::from_affine(w), Direction::Backward, 1e-9, 100);
  CHECK(lifted.converged);
  CHECK(std::abs(lifted.value - (affine.value + 0.5 * std::log(1.5))) <= 1e-6);
}

TEST_CASE("lifted forward sequence decreases inside the trap") {
  // after renormalization the per-step increment is 2^-(n+1) ln c_{n+1} with
  // ln c <= ln(1 + max(|a|,|b|)); the estimate decreases up to that slack
  const Point3 w = Point3::from_complex(1e4, 1e4, 1);
  ProjPoint v = ProjPoint::from_affine(w);
  double prev = v.scale;
  for (int n = 0; n < 30; ++n) {
    v = lift_step(kP11, v, Direction::Forward);
    const double slack =
        std::pow(2.0, -(n + 1.0)) * std::log(2.0) + 1e-12;  // 1 + max(|a|,|b|) = 2
    CHECK(v.scale <= prev + slack);
    prev = v.scale;
  }
}
