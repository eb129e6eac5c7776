#include "quadmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "quadmap/errors.hpp"
#include "quadmap/parallel.hpp"

namespace quadmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSlack = 1e-9;

enum class Outcome { Pass, Fail, Skip };

struct SampleResult {
  Outcome outcome = Outcome::Pass;
  double margin = kInf;
  std::string detail;
};

template <typename Eval>
VerifyReport run_suite(const std::string& property, const Params& p,
                       const RegionConstants& c, const std::vector<Point3>& points,
                       std::uint64_t seed, int workers, Eval eval) {
  VerifyReport rep;
  rep.property = property;
  rep.seed = seed;
  rep.params = p;
  rep.constants = c;
  rep.attempted = static_cast<int>(points.size());
  rep.worst_margin = kInf;

  std::vector<SampleResult> results(points.size());
  parallel_for(points.size(), workers,
               [&](std::size_t i) { results[i] = eval(points[i]); });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const SampleResult& r = results[i];
    switch (r.outcome) {
      case Outcome::Pass:
        ++rep.passed;
        break;
      case Outcome::Fail:
        ++rep.failed;
        rep.failures.push_back({points[i], r.margin, r.detail});
        break;
      case Outcome::Skip:
        ++rep.skipped;
        continue;
    }
    rep.worst_margin = std::min(rep.worst_margin, r.margin);
  }
  return rep;
}

double finite_log(const ComplexExt& v) { return ext_log_mag(v).as_double(); }

void tighten(SampleResult& r, double slack, const char* what) {
  if (slack < r.margin) {
    r.margin = slack;
    r.detail = what;
  }
  if (slack < 0.0) r.outcome = Outcome::Fail;
}

}  // namespace

Point3 sample_v_plus(const RegionConstants& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const double log_r = std::log(c.r_plus);
  for (;;) {
    const double lz = log_r + 1e-6 + 20.0 * unit(rng);
    const double lx = lz - 20.0 * unit(rng);
    const double ly_hi = 2.0 * (lz - std::log(1.0 + c.delta));
    const double ly = ly_hi - 20.0 * unit(rng);
    Point3 w{ext_from_log_polar(lx, phase(rng)), ext_from_log_polar(ly, phase(rng)),
             ext_from_log_polar(lz, phase(rng))};
    if (in_v_plus(w, c)) return w;
  }
}

Point3 sample_v_minus(const RegionConstants& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const double log_r = std::log(c.r_minus);
  const double log_eps = std::log(c.epsilon);
  const double u_min = (log_r - 2.0 * log_eps) / 3.0 + 0.5;
  for (;;) {
    const double lx = u_min + 20.0 * unit(rng);
    const double ly_lo = std::max(0.5 * lx, log_r - lx);
    const double ly_hi = 2.0 * (lx + log_eps);
    const double ly = ly_lo + (ly_hi - ly_lo) * unit(rng);
    const double lz_hi = lx + ly - std::log(2.0 * c.abs_a);
    const double lz = lz_hi - 20.0 * unit(rng);
    Point3 w{ext_from_log_polar(lx, phase(rng)), ext_from_log_polar(ly, phase(rng)),
             ext_from_log_polar(lz, phase(rng))};
    if (in_v_minus(w, c)) return w;
  }
}

std::vector<Point3> sample_k_side(const Params& p, const RegionConstants& c,
                                  std::size_t count, std::size_t horizon, Direction dir,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::vector<Point3> out;
  const std::size_t budget = 200 * count + 1000;
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    auto coord = [&] {
      return ComplexExt::from_complex(std::polar(1.2 * unit(rng), phase(rng)));
    };
    Point3 w{coord(), coord(), coord()};
    const RegionVerdict v = region_verdict(p, c, w, horizon, dir);
    if (!v.escaped()) out.push_back(w);
  }
  return out;
}

VerifyReport verify_trap_forward(const Params& p, const RegionConstants& c, int samples,
                                 std::uint64_t seed, int workers) {
  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  std::mt19937_64 rng(seed);
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) pts.push_back(sample_v_minus(c, rng));

  const double log_b_eps2_lo = std::log(1.0 - c.abs_b * c.epsilon * c.epsilon);
  const double log_b_eps2_hi = std::log(1.0 + c.abs_b * c.epsilon * c.epsilon);

  return run_suite("trap_forward", p, c, pts, seed, workers, [&](const Point3& w) {
    SampleResult r;
    const Point3 w1 = forward_step(p, w);
    const double lx = finite_log(w.x), ly = finite_log(w.y);
    const double lx1 = finite_log(w1.x), ly1 = finite_log(w1.y), lz1 = finite_log(w1.z);

    // membership of the image
    double rhs = std::log(c.r_minus);
    rhs = std::max(rhs, std::log(2.0 * c.abs_a) + lz1);
    rhs = std::max(rhs, 1.5 * lx1);
    rhs = std::max(rhs, -std::log(c.epsilon) + 1.5 * ly1);
    tighten(r, lx1 + ly1 - rhs, "H(w) in V-");

    tighten(r, lx1 - (lx + ly - std::log(2.0)), "|xy|/2 < |x1|");
    tighten(r, (lx + ly + std::log(1.5)) - lx1, "|x1| < 3|xy|/2");
    tighten(r, ly1 - (log_b_eps2_lo + 2.0 * lx), "(1-|b|eps^2)|x|^2 < |y1|");
    tighten(r, (log_b_eps2_hi + 2.0 * lx) - ly1, "|y1| < (1+|b|eps^2)|x|^2");
    return r;
  });
}

VerifyReport verify_trap_backward(const Params& p, const RegionConstants& c, int samples,
                                  std::uint64_t seed, int workers) {
  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  std::mt19937_64 rng(seed);
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) pts.push_back(sample_v_plus(c, rng));

  return run_suite("trap_backward", p, c, pts, seed, workers, [&](const Point3& w) {
    SampleResult r;
    const Point3 w1 = inverse_step(p, w);
    const double lz = finite_log(w.z);
    const double lx1 = finite_log(w1.x), ly1 = finite_log(w1.y), lz1 = finite_log(w1.z);

    double rhs = std::log(c.r_plus);
    rhs = std::max(rhs, lx1);
    rhs = std::max(rhs, std::log(1.0 + c.delta) + 0.5 * ly1);
    tighten(r, lz1 - rhs, "H^-1(w) in V+");

    tighten(r, lz1 - (std::log(c.c1) + 3.0 * lz), "C1|z|^3 < |z1|");
    tighten(r, (std::log(c.c2) + 3.0 * lz) - lz1, "|z1| < C2|z|^3");
    return r;
  });
}

VerifyReport verify_kminus_bounded(const Params& p, const RegionConstants& c, int samples,
                                   std::size_t horizon, std::uint64_t seed, int workers) {
  if (!c.kminus_bound_applies) {
    throw NotApplicable("K- boundedness requires |b| > 1");
  }
  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  std::mt19937_64 rng(seed);
  const std::vector<Point3> pts =
      sample_k_side(p, c, static_cast<std::size_t>(samples), horizon, Direction::Backward,
                    rng);
  const double log_r = std::log(c.r_plus);
  const double log_1d = std::log(1.0 + c.delta);

  return run_suite("kminus_bounded", p, c, pts, seed, workers, [&](const Point3& w) {
    SampleResult r;
    const OrbitSeries s = orbit(p, w, horizon, Direction::Backward, horizon);
    if (s.termination != Termination::Completed) {
      r.outcome = Outcome::Fail;
      r.margin = -kInf;
      r.detail = "backward orbit not representable";
      return r;
    }
    // running-max stabilization of ln||H^-n(w)||
    double first_half = w.log_sup().as_double();
    double second_half = -kInf;
    for (std::size_t n = 0; n < s.logmags.size(); ++n) {
      if (n + 1 <= horizon / 2) {
        first_half = std::max(first_half, s.logmags[n][3]);
      } else {
        second_half = std::max(second_half, s.logmags[n][3]);
      }
    }
    tighten(r, first_half + std::log1p(1e-6) - second_half, "running max stabilizes");

    // M_n = max(R, |x_n|, (1+delta)|y_n|^(1/2)), monotone once above R
    auto log_m = [&](double lx, double ly) {
      return std::max({log_r, lx, log_1d + 0.5 * ly});
    };
    double prev = log_m(finite_log(w.x), finite_log(w.y));
    for (const auto& lm : s.logmags) {
      const double curr = log_m(lm[0], lm[1]);
      if (prev > log_r + kLogSlack) {
        tighten(r, prev + kLogSlack - curr, "M_{n+1} <= M_n above threshold");
      }
      prev = curr;
    }
    return r;
  });
}

VerifyReport verify_green_functional(const Params& p, const RegionConstants& c,
                                     int samples, double tol, std::uint64_t seed,
                                     int workers) {
  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  std::mt19937_64 rng(seed);
  std::vector<Point3> pts;
  std::vector<Direction> dirs;
  for (int i = 0; i < samples; ++i) {
    pts.push_back(sample_v_minus(c, rng));
    dirs.push_back(Direction::Forward);
  }
  for (int i = 0; i < samples; ++i) {
    pts.push_back(sample_v_plus(c, rng));
    dirs.push_back(Direction::Backward);
  }
  const std::size_t horizon = 100;

  VerifyReport rep;
  rep.property = "green_functional";
  rep.seed = seed;
  rep.params = p;
  rep.constants = c;
  rep.attempted = static_cast<int>(pts.size());
  rep.worst_margin = kInf;
  std::vector<SampleResult> results(pts.size());
  parallel_for(pts.size(), workers, [&](std::size_t i) {
    SampleResult r;
    const Point3& w = pts[i];
    if (dirs[i] == Direction::Forward) {
      const GreenEstimate g = green_plus(p, c, w, tol, horizon);
      const GreenEstimate gh = green_plus(p, c, forward_step(p, w), tol, horizon);
      if (!g.converged || !gh.converged) {
        r.outcome = Outcome::Skip;
        r.detail = "unresolved";
      } else {
        tighten(r, 10.0 * tol - std::abs(gh.value - 2.0 * g.value),
                "|G+(H(w)) - 2G+(w)| <= 10 tol");
      }
    } else {
      const GreenEstimate g = green_minus(p, c, w, tol, horizon);
      const GreenEstimate gh = green_minus(p, c, inverse_step(p, w), tol, horizon);
      if (!g.converged || !gh.converged) {
        r.outcome = Outcome::Skip;
        r.detail = "unresolved";
      } else {
        tighten(r, 10.0 * tol - std::abs(gh.value - 3.0 * g.value),
                "|G-(H^-1(w)) - 3G-(w)| <= 10 tol");
      }
    }
    results[i] = r;
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SampleResult& r = results[i];
    if (r.outcome == Outcome::Skip) {
      ++rep.skipped;
      continue;
    }
    if (r.outcome == Outcome::Fail) {
      ++rep.failed;
      rep.failures.push_back({pts[i], r.margin, r.detail});
    } else {
      ++rep.passed;
    }
    rep.worst_margin = std::min(rep.worst_margin, r.margin);
  }
  return rep;
}

VerifyReport verify_growth_envelope(const Params& p, const RegionConstants& c, int samples,
                                    std::size_t horizon, std::uint64_t seed, int workers) {
  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  std::mt19937_64 rng(seed);
  const std::vector<Point3> pts =
      sample_k_side(p, c, static_cast<std::size_t>(samples), horizon, Direction::Forward,
                    rng);
  const double sqrt3 = std::sqrt(3.0);

  return run_suite("growth_envelope", p, c, pts, seed, workers, [&](const Point3& w) {
    SampleResult r;
    const GrowthEnvelope env = m_sequence(p, c, w, horizon);
    const OrbitSeries s = orbit(p, w, horizon, Direction::Forward, horizon);
    const double log_ct = std::log(env.c_tilde);
    const std::size_t steps = std::min(env.log_m.size() - 1, s.logmags.size());

    double lx_prev = finite_log(w.x);
    for (std::size_t n = 1; n <= steps; ++n) {
      const double lx = s.logmags[n - 1][0];
      const double ly = s.logmags[n - 1][1];
      const double m_prev = env.log_m[n - 1];
      const double m = env.log_m[n];
      const double slack = kLogSlack * std::max(1.0, std::abs(m));

      tighten(r, std::log(1.5) + m_prev + slack - lx, "(i) |x_n| <= 3M_{n-1}/2");
      tighten(r,
              std::max(1.5 * (std::log(1.5) + m_prev), -std::log(c.epsilon) + 1.5 * ly) +
                  slack - m,
              "(ii) M_n <= max((3M/2)^(3/2), |y_n|^(3/2)/eps)");
      tighten(r, log_ct + std::max(1.5 * m_prev, 3.0 * lx_prev) + slack - m,
              "(iii) M_n <= C max(M^(3/2), |x_{n-1}|^3)");
      tighten(r, std::pow(sqrt3, static_cast<double>(n)) * env.log_m_tilde + slack - m,
              "(iv) ln M_n <= (sqrt3)^n ln m_tilde");
      lx_prev = lx;
    }
    return r;
  });
}

namespace {

nlohmann::ordered_json coord_json(const ComplexExt& v) {
  nlohmann::ordered_json j;
  if (v.is_zero()) {
    j["re"] = 0.0;
    j["im"] = 0.0;
    j["exp10"] = 0;
    return j;
  }
  const double l10 = (std::log(std::abs(v.mantissa())) +
                      static_cast<double>(v.exponent()) * kLn2) /
                     std::log(10.0);
  const double e10 = std::floor(l10);
  const double mag = std::pow(10.0, l10 - e10);
  const double ph = std::arg(v.mantissa());
  j["re"] = mag * std::cos(ph);
  j["im"] = mag * std::sin(ph);
  j["exp10"] = static_cast<std::int64_t>(e10);
  return j;
}

nlohmann::ordered_json report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["seed"] = r.seed;
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["worst_margin"] = std::isfinite(r.worst_margin) ? r.worst_margin : 1e308;
  j["params"] = {{"a", {r.params.a.real(), r.params.a.imag()}},
                 {"b", {r.params.b.real(), r.params.b.imag()}}};
  j["constants"] = {{"r_plus", r.constants.r_plus},   {"delta", r.constants.delta},
                    {"alpha", r.constants.alpha},     {"r_minus", r.constants.r_minus},
                    {"epsilon", r.constants.epsilon}, {"theta", r.constants.theta},
                    {"c1", r.constants.c1},           {"c2", r.constants.c2},
                    {"kminus_bound_applies", r.constants.kminus_bound_applies}};
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json fj;
    fj["point"] = {coord_json(f.point.x), coord_json(f.point.y), coord_json(f.point.z)};
    fj["margin"] = f.margin;
    fj["detail"] = f.detail;
    j["failures"].push_back(fj);
  }
  return j;
}

}  // namespace

std::string report_to_json(const VerifyReport& report) {
  return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(report_json(r));
  return j.dump(2);
}

}  // namespace quadmap
