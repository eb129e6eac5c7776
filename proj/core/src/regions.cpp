#include "quadmap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "quadmap/errors.hpp"

namespace quadmap {

void RegionConstants::recompute_derived() {
  theta = alpha + 1.0 / ((1.0 + delta) * (1.0 + delta));
  const double ab = abs_a * abs_b;
  c1 = (1.0 - theta) / ab;
  c2 = (1.0 + theta) / ab;
  kminus_bound_applies = abs_b > 1.0;
}

namespace {

struct EpsCheck {
  bool ok;
  std::string tightest;  // description of the most violated inequality
  double worst_slack;
};

EpsCheck check_epsilon(double eps, double abs_a, double abs_b) {
  const double rhs = (1.0 - abs_b * eps * eps) / 2.0;
  const double lhs1 = std::pow(eps, 3) * std::pow(1.5, 1.5);
  const double lhs2 = eps * std::pow(1.0 + abs_b * eps * eps, 1.5);
  const double lhs3 = 4.0 * abs_a * std::pow(eps, 10);
  const double s1 = rhs - lhs1;
  const double s2 = rhs - lhs2;
  const double s3 = 2.0 * rhs - lhs3;  // strict
  EpsCheck r;
  r.ok = s1 >= 0.0 && s2 >= 0.0 && s3 > 0.0;
  double worst = s1;
  r.tightest = "eps^3 (3/2)^(3/2) <= (1-|b|eps^2)/2";
  if (s2 < worst) {
    worst = s2;
    r.tightest = "eps (1+|b|eps^2)^(3/2) <= (1-|b|eps^2)/2";
  }
  if (s3 < worst) {
    worst = s3;
    r.tightest = "(1-|b|eps^2) > 4|a| eps^10";
  }
  r.worst_slack = worst;
  return r;
}

}  // namespace

std::optional<std::string> validate_constants(const RegionConstants& c) {
  std::ostringstream msg;
  if (!(c.alpha > 0.0) || !(c.delta > 0.0) || !(c.epsilon > 0.0)) {
    return "alpha, delta, epsilon must be positive";
  }
  if (!(c.alpha + 1.0 / ((1.0 + c.delta) * (1.0 + c.delta)) < 1.0)) {
    msg << "alpha + (1+delta)^-2 < 1 violated (got "
        << c.alpha + 1.0 / ((1.0 + c.delta) * (1.0 + c.delta)) << ")";
    return msg.str();
  }
  if (!(c.r_plus >= std::sqrt(c.abs_b / c.alpha))) {
    msg << "R+ >= sqrt(|b|/alpha) violated (R+ = " << c.r_plus << ", bound "
        << std::sqrt(c.abs_b / c.alpha) << ")";
    return msg.str();
  }
  if (!(c.r_minus > 1.0 / std::pow(c.epsilon, 10))) {
    msg << "R- > 1/eps^10 violated (R- = " << c.r_minus << ", bound "
        << 1.0 / std::pow(c.epsilon, 10) << ")";
    return msg.str();
  }
  const EpsCheck ec = check_epsilon(c.epsilon, c.abs_a, c.abs_b);
  if (!ec.ok) {
    msg << "epsilon inequality violated: " << ec.tightest << " (eps = " << c.epsilon << ")";
    return msg.str();
  }
  return std::nullopt;
}

RegionConstants choose_constants(const Params& p, const ConstantOverrides& ov) {
  const double abs_a = std::abs(p.a);
  const double abs_b = std::abs(p.b);
  if (abs_a * abs_b == 0.0) throw InvalidConstants("ab = 0: not an automorphism of C^3");

  RegionConstants c;
  c.abs_a = abs_a;
  c.abs_b = abs_b;
  c.delta = ov.delta.value_or(abs_b > 1.0 ? abs_b - 1.0 : 0.5);
  const double inv = 1.0 / ((1.0 + c.delta) * (1.0 + c.delta));
  c.alpha = ov.alpha.value_or((1.0 - inv) / 2.0);
  c.r_plus = ov.r_plus.value_or(std::max(10.0, 2.0 * std::sqrt(abs_b / c.alpha)));

  if (ov.epsilon) {
    c.epsilon = *ov.epsilon;
  } else {
    c.epsilon = 0.0;
    EpsCheck last{false, "", 0.0};
    for (int i = 10; i >= 1; --i) {
      const double eps = 0.05 * i;
      last = check_epsilon(eps, abs_a, abs_b);
      if (last.ok) {
        c.epsilon = eps;
        break;
      }
    }
    if (c.epsilon == 0.0) {
      throw NoFeasibleEpsilon("no epsilon in {0.50,...,0.05} satisfies the trap "
                              "inequalities; tightest: " + last.tightest);
    }
  }
  c.r_minus = ov.r_minus.value_or(2.0 / std::pow(c.epsilon, 10));
  c.recompute_derived();

  if (auto err = validate_constants(c)) throw InvalidConstants(*err);
  return c;
}

bool in_v_plus(const Point3& w, const RegionConstants& c) {
  const LogMag lx = ext_log_mag(w.x);
  const LogMag ly = ext_log_mag(w.y);
  const LogMag lz = ext_log_mag(w.z);
  LogMag rhs = LogMag::of(std::log(c.r_plus));
  rhs = std::max(rhs, lx);
  rhs = std::max(rhs, LogMag::of(std::log(1.0 + c.delta)) + 0.5 * ly);
  return rhs < lz;
}

bool in_v_minus(const Point3& w, const RegionConstants& c) {
  const LogMag lx = ext_log_mag(w.x);
  const LogMag ly = ext_log_mag(w.y);
  const LogMag lz = ext_log_mag(w.z);
  const LogMag lhs = lx + ly;
  LogMag rhs = LogMag::of(std::log(c.r_minus));
  rhs = std::max(rhs, LogMag::of(std::log(2.0 * c.abs_a)) + lz);
  rhs = std::max(rhs, 1.5 * lx);
  rhs = std::max(rhs, LogMag::of(-std::log(c.epsilon)) + 1.5 * ly);
  return rhs < lhs;
}

RegionVerdict region_verdict(const Params& p, const RegionConstants& c, const Point3& w,
                             std::size_t horizon, Direction dir) {
  const bool fwd = dir == Direction::Forward;
  Point3 cur = w;
  for (std::size_t n = 0; n <= horizon; ++n) {
    const bool hit = fwd ? in_v_minus(cur, c) : in_v_plus(cur, c);
    if (hit) {
      return {fwd ? RegionVerdict::Kind::InUPlus : RegionVerdict::Kind::InUMinus, n};
    }
    if (n == horizon) break;
    const std::int64_t cap = kOrbitExponentCap;
    Point3 next = fwd ? forward_step(p, cur) : inverse_step(p, cur);
    if (std::llabs(next.x.exponent()) > cap || std::llabs(next.y.exponent()) > cap ||
        std::llabs(next.z.exponent()) > cap) {
      // could not continue; report the K-side verdict for the steps reached
      return {fwd ? RegionVerdict::Kind::KPlusUpToHorizon
                  : RegionVerdict::Kind::KMinusUpToHorizon,
              n};
    }
    cur = next;
  }
  return {fwd ? RegionVerdict::Kind::KPlusUpToHorizon
              : RegionVerdict::Kind::KMinusUpToHorizon,
          horizon};
}

GrowthEnvelope m_sequence(const Params& p, const RegionConstants& c, const Point3& w,
                          std::size_t n) {
  GrowthEnvelope g;
  const std::size_t steps = std::max<std::size_t>(n, 1);
  const double log_r = std::log(c.r_minus);
  const double log_2a = std::log(2.0 * c.abs_a);
  const double log_inv_eps = -std::log(c.epsilon);

  Point3 cur = w;
  std::vector<double> all;
  all.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    double m = log_r;
    const double lx = ext_log_mag(cur.x).as_double();
    const double ly = ext_log_mag(cur.y).as_double();
    const double lz = ext_log_mag(cur.z).as_double();
    if (std::isfinite(lz)) m = std::max(m, log_2a + lz);
    if (std::isfinite(lx)) m = std::max(m, 1.5 * lx);
    if (std::isfinite(ly)) m = std::max(m, log_inv_eps + 1.5 * ly);
    all.push_back(m);
    if (k < steps) {
      Point3 next = forward_step(p, cur);
      if (std::llabs(next.x.exponent()) > kOrbitExponentCap ||
          std::llabs(next.y.exponent()) > kOrbitExponentCap ||
          std::llabs(next.z.exponent()) > kOrbitExponentCap) {
        break;
      }
      cur = next;
    }
  }

  g.c_tilde = 2.0 * std::max(std::pow(2.0, 1.5) *
                                 std::max(1.0 / c.epsilon, std::pow(c.abs_b, 1.5)),
                             std::pow(1.5, 3));
  const double log_ct = std::log(g.c_tilde);
  g.log_m_tilde = all.size() >= 2
                      ? std::max(log_ct + all[0], 2.0 * (log_ct + all[1]))
                      : log_ct + all[0];
  const std::size_t keep = std::min(all.size(), n + 1);
  g.log_m = std::vector<double>(all.begin(), all.begin() + static_cast<long>(keep));
  return g;
}

}  // namespace quadmap
