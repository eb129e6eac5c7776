#include <cmath>
#include <random>

#include <doctest.h>

#include "quadmap/errors.hpp"
#include "quadmap/verify.hpp"

using namespace quadmap;

namespace {
const Params kP11{{1, 0}, {1, 0}};
const Params kP15{{1, 0}, {1.5, 0}};
}  // namespace

TEST_CASE("trap samplers produce members") {
  const RegionConstants c = choose_constants(kP15);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(in_v_plus(sample_v_plus(c, rng), c));
    CHECK(in_v_minus(sample_v_minus(c, rng), c));
  }
}

TEST_CASE("forward trap invariance suite") {
  const RegionConstants c = choose_constants(kP11);
  const VerifyReport r = verify_trap_forward(kP11, c, 1000, 7);
  CHECK(r.attempted == 1000);
  CHECK(r.passed == 1000);
  CHECK(r.failed == 0);
  CHECK(r.worst_margin > 0.0);
  CHECK(r.property == "trap_forward");
}

TEST_CASE("empty suite is a vacuous pass") {
  const RegionConstants c = choose_constants(kP11);
  const VerifyReport r = verify_trap_forward(kP11, c, 0, 7);
  CHECK(r.attempted == 0);
  CHECK(r.failed == 0);
  CHECK(std::isinf(r.worst_margin));
}

TEST_CASE("broken constants are rejected before sampling") {
  RegionConstants c = choose_constants(kP11);
  c.epsilon *= 2.0;  // past feasibility
  CHECK_THROWS_AS(verify_trap_forward(kP11, c, 10, 7), InvalidConstants);
}

TEST_CASE("backward trap invariance suite") {
  const RegionConstants c = choose_constants(kP15);
  const VerifyReport r = verify_trap_backward(kP15, c, 1000, 7);
  CHECK(r.passed == 1000);
  CHECK(r.failed == 0);
}

TEST_CASE("backward cubic bound spot value") {
  const RegionConstants c = choose_constants(kP15);
  const Point3 w1 = inverse_step(kP15, Point3::from_complex(1, 4, 100));
  const double z1 = std::abs(w1.z.to_complex());
  CHECK(z1 == doctest::Approx(666401.0));
  CHECK(z1 > c.c1 * 1e6);
  CHECK(z1 < c.c2 * 1e6);
}

TEST_CASE("K- boundedness suite") {
  // |a| > 1 makes the backward map contract near the origin, so the sampled
  // ball is genuinely K-; with a = 1 the marginal x/z swap lets most small
  // points creep into V+ after a long transient
  const Params p{{2, 0}, {1.5, 0}};
  const RegionConstants c = choose_constants(p);
  const VerifyReport r = verify_kminus_bounded(p, c, 20, 200, 7);
  CHECK(r.attempted > 0);
  CHECK(r.failed == 0);
}

TEST_CASE("K- boundedness requires |b| > 1") {
  const Params p{{1, 0}, {0.5, 0}};
  const RegionConstants c = choose_constants(p);
  CHECK_THROWS_AS(verify_kminus_bounded(p, c, 10, 100, 7), NotApplicable);
}

TEST_CASE("V+ points are excluded from K- sampling") {
  const RegionConstants c = choose_constants(kP15);
  std::mt19937_64 rng(7);
  const auto pts = sample_k_side(kP15, c, 30, 100, Direction::Backward, rng);
  for (const auto& w : pts) {
    CHECK_FALSE(region_verdict(kP15, c, w, 100, Direction::Backward).escaped());
  }
}

TEST_CASE("green functional suite") {
  const RegionConstants c = choose_constants(kP11);
  const VerifyReport r = verify_green_functional(kP11, c, 40, 1e-8, 7);
  CHECK(r.attempted == 80);  // both directions
  CHECK(r.failed == 0);
  CHECK(r.passed > 0);
}

TEST_CASE("growth envelope suite") {
  const RegionConstants c = choose_constants(kP11);
  const VerifyReport r = verify_growth_envelope(kP11, c, 30, 60, 7);
  CHECK(r.attempted > 0);
  CHECK(r.failed == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  const RegionConstants c = choose_constants(kP11);
  const std::string a = report_to_json(verify_trap_forward(kP11, c, 64, 7, 1));
  const std::string b = report_to_json(verify_trap_forward(kP11, c, 64, 7, 4));
  const std::string d = report_to_json(verify_trap_forward(kP11, c, 64, 7, 3));
  CHECK(a == b);
  CHECK(a == d);

  const std::string g1 = report_to_json(verify_green_functional(kP11, c, 16, 1e-8, 7, 1));
  const std::string g2 = report_to_json(verify_green_functional(kP11, c, 16, 1e-8, 7, 5));
  CHECK(g1 == g2);
}

TEST_CASE("report JSON carries the run configuration") {
  const RegionConstants c = choose_constants(kP15);
  const std::string j = report_to_json(verify_trap_backward(kP15, c, 4, 42));
  CHECK(j.find("\"property\": \"trap_backward\"") != std::string::npos);
  CHECK(j.find("\"seed\": 42") != std::string::npos);
  CHECK(j.find("\"epsilon\"") != std::string::npos);
  const std::string multi = reports_to_json({verify_trap_backward(kP15, c, 2, 1)});
  CHECK(multi.front() == '[');
}
