#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "quadmap/errors.hpp"
#include "quadmap/maps.hpp"

using namespace quadmap;

namespace {

void check_point(const Point3& w, std::complex<double> x, std::complex<double> y,
                 std::complex<double> z, double tol = 1e-12) {
  CHECK(std::abs(w.x.to_complex() - x) <= tol * std::max(1.0, std::abs(x)));
  CHECK(std::abs(w.y.to_complex() - y) <= tol * std::max(1.0, std::abs(y)));
  CHECK(std::abs(w.z.to_complex() - z) <= tol * std::max(1.0, std::abs(z)));
}

}  // namespace

TEST_CASE("forward step") {
  check_point(forward_step({{1, 0}, {1, 0}}, Point3::from_complex(1, 1, 1)), 2, 2, 1);
  check_point(forward_step({{1, 0}, {2, 0}}, Point3::from_complex(1, 2, 3)), 5, 5, 1);
  const Point3 o = forward_step({{1, 0}, {1, 0}}, Point3::from_complex(0, 0, 0));
  CHECK(o.x.is_zero());
  CHECK(o.y.is_zero());
  CHECK(o.z.is_zero());
}

TEST_CASE("inverse step") {
  check_point(inverse_step({{1, 0}, {2, 0}}, Point3::from_complex(5, 5, 1)), 1, 2, 3);
  check_point(inverse_step({{1, 0}, {1.5, 0}}, Point3::from_complex(1, 4, 100)), 100,
              -6664, 666401);
  const Point3 o = inverse_step({{1, 0}, {1, 0}}, Point3::from_complex(0, 0, 0));
  CHECK(o.x.is_zero());
  CHECK(o.y.is_zero());
  CHECK(o.z.is_zero());
}

TEST_CASE("inverse round-trips the forward step") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Params p{{1.0, 0.3}, {1.5, -0.2}};
  for (int i = 0; i < 200; ++i) {
    const Point3 w = Point3::from_complex({u(rng), u(rng)}, {u(rng), u(rng)},
                                          {u(rng), u(rng)});
    const Point3 back = inverse_step(p, forward_step(p, w));
    check_point(back, w.x.to_complex(), w.y.to_complex(), w.z.to_complex(), 1e-10);
  }
}

TEST_CASE("orbit records logs, checkpoints, and the final point") {
  const Params p{{1, 0}, {1, 0}};
  const OrbitSeries s = orbit(p, Point3::from_complex(2, 2, 1), 3, Direction::Forward);
  CHECK(s.steps_taken == 3);
  CHECK(s.termination == Termination::Completed);
  CHECK(s.logmags.size() == 3);
  check_point(s.final_point, 997, 1055, 32);
  // stride 1: states at steps 0..3
  REQUIRE(s.checkpoints.size() == 4);
  check_point(s.checkpoints[0], 2, 2, 1);
  check_point(s.checkpoints[1], 5, 6, 2);
  check_point(s.checkpoints[2], 32, 31, 5);
  CHECK(s.logmags[2][0] == doctest::Approx(std::log(997.0)));
  CHECK(s.logmags[2][3] == doctest::Approx(std::log(1055.0)));
}

TEST_CASE("orbit stride subsamples but keeps the final state") {
  const Params p{{1, 0}, {1, 0}};
  const OrbitSeries s = orbit(p, Point3::from_complex(2, 2, 1), 3, Direction::Forward, 2);
  REQUIRE(s.checkpoints.size() == 3);  // steps 0, 2, 3
  check_point(s.checkpoints[1], 32, 31, 5);
  check_point(s.checkpoints[2], 997, 1055, 32);
}

TEST_CASE("orbit of the origin is the all-zero series") {
  const OrbitSeries s =
      orbit({{1, 0}, {1, 0}}, Point3::from_complex(0, 0, 0), 100, Direction::Forward);
  CHECK(s.steps_taken == 100);
  CHECK(s.final_point.x.is_zero());
  for (const auto& lm : s.logmags) CHECK(std::isinf(lm[3]));
}

TEST_CASE("orbit survives growth far beyond double range") {
  const Params p{{1, 0}, {1, 0}};
  const OrbitSeries s =
      orbit(p, Point3::from_complex(1e4, 1e4, 1), 40, Direction::Forward);
  CHECK(s.steps_taken == 40);
  CHECK(s.termination == Termination::Completed);
  // ln sup ~ c * 2^n; doubling per step within a few percent by the tail
  const double ratio = s.logmags[39][3] / s.logmags[38][3];
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("orbit stops with ExponentOverflow instead of corrupting exponents") {
  const Params p{{1, 0}, {1, 0}};
  const OrbitSeries s =
      orbit(p, Point3::from_complex(1e4, 1e4, 1), 500, Direction::Forward);
  CHECK(s.termination == Termination::ExponentOverflow);
  CHECK(s.steps_taken < 500);
  CHECK(std::llabs(s.final_point.y.exponent()) <= kOrbitExponentCap);
}

TEST_CASE("lift fixed point and normalization") {
  const Params p{{1, 0}, {1, 0}};
  const ProjPoint origin = ProjPoint::from_affine(Point3::from_complex(0, 0, 0));
  const ProjPoint next = lift_step(p, origin, Direction::Forward);
  CHECK(next.v[3].to_complex().real() == doctest::Approx(1.0));
  CHECK(next.v[0].is_zero());
  CHECK(next.scale == doctest::Approx(0.0));

  const ProjPoint ones = ProjPoint::from_homogeneous(
      {ComplexExt::from_real(1), ComplexExt::from_real(1), ComplexExt::from_real(1),
       ComplexExt::from_real(1)});
  const ProjPoint r = lift_step(p, ones, Direction::Forward);
  // image (2,2,1,1) renormalized by c=2
  CHECK(r.v[0].to_complex().real() == doctest::Approx(1.0));
  CHECK(r.v[1].to_complex().real() == doctest::Approx(1.0));
  CHECK(r.v[2].to_complex().real() == doctest::Approx(0.5));
  CHECK(r.v[3].to_complex().real() == doctest::Approx(0.5));
  CHECK(r.scale == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(r.steps == 1);
}

TEST_CASE("forward lift tracks the affine orbit on affine points") {
  const Params p{{1, 0}, {1.5, 0}};
  const Point3 w = Point3::from_complex({1.1, 0.4}, {0.7, -0.3}, {2.0, 0.1});
  ProjPoint v = ProjPoint::from_affine(w);
  Point3 cur = w;
  for (int n = 0; n < 5; ++n) {
    v = lift_step(p, v, Direction::Forward);
    cur = forward_step(p, cur);
    // dehomogenize: X/T must equal the affine x
    const std::complex<double> xt = ext_div(v.v[0], v.v[3]).to_complex();
    CHECK(std::abs(xt - cur.x.to_complex()) <= 1e-9 * std::abs(cur.x.to_complex()));
  }
}

TEST_CASE("backward lift equals the inverse up to the ab clearing factor") {
  const Params p{{1, 0}, {1.5, 0}};
  const Point3 w = Point3::from_complex(1, 4, 100);
  const ProjPoint v = lift_step(p, ProjPoint::from_affine(w), Direction::Backward);
  const Point3 inv = inverse_step(p, w);
  for (int i = 0; i < 3; ++i) {
    const ComplexExt affine = i == 0 ? inv.x : (i == 1 ? inv.y : inv.z);
    const std::complex<double> got = ext_div(v.v[i], v.v[3]).to_complex();
    CHECK(std::abs(got - affine.to_complex()) <=
          1e-9 * std::max(1.0, std::abs(affine.to_complex())));
  }
}

TEST_CASE("lift throws on the indeterminacy sets") {
  const Params p{{1, 0}, {1, 0}};
  const ComplexExt one = ComplexExt::from_real(1);
  const ComplexExt zero;
  // I+ = {t = x = 0}
  const ProjPoint iplus =
      ProjPoint::from_homogeneous(std::array<ComplexExt, 4>{zero, one, one, zero});
  CHECK_THROWS_AS(lift_step(p, iplus, Direction::Forward), IndeterminacyHit);
  // I- = {t = z = 0}
  const ProjPoint iminus =
      ProjPoint::from_homogeneous(std::array<ComplexExt, 4>{one, one, zero, zero});
  CHECK_THROWS_AS(lift_step(p, iminus, Direction::Backward), IndeterminacyHit);
  // but forward is fine on I-
  CHECK_NOTHROW(lift_step(p, iminus, Direction::Forward));
}
