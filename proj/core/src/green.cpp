#include "quadmap/green.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace quadmap {

namespace {

double log_plus(const LogMag& l) {
  return l.neg_inf ? 0.0 : std::max(0.0, l.value);
}

bool over_cap(const Point3& w) {
  return std::llabs(w.x.exponent()) > kOrbitExponentCap ||
         std::llabs(w.y.exponent()) > kOrbitExponentCap ||
         std::llabs(w.z.exponent()) > kOrbitExponentCap;
}

GreenEstimate refine_affine(const Params& p, const Point3& w, double tol,
                            std::size_t escape_step, Direction dir) {
  const double base = dir == Direction::Forward ? 2.0 : 3.0;
  const std::size_t max_extra = 400;

  Point3 cur = w;
  double weight = 1.0;
  double prev = dir == Direction::Forward ? log_plus(ext_log_mag(cur.x))
                                          : log_plus(ext_log_mag(cur.z));
  GreenEstimate est;
  int streak = 0;
  for (std::size_t n = 1; n <= escape_step + max_extra; ++n) {
    Point3 next = dir == Direction::Forward ? forward_step(p, cur) : inverse_step(p, cur);
    if (over_cap(next)) break;
    cur = next;
    weight /= base;
    const double g = weight * (dir == Direction::Forward
                                   ? log_plus(ext_log_mag(cur.x))
                                   : log_plus(ext_log_mag(cur.z)));
    est.residual = std::abs(g - prev);
    est.iterations_used = static_cast<int>(n);
    est.value = std::max(0.0, g);
    prev = g;
    if (n > escape_step) {
      streak = est.residual < tol ? streak + 1 : 0;
      if (streak >= 3) {
        est.converged = true;
        break;
      }
    }
  }
  return est;
}

}  // namespace

GreenEstimate green_plus(const Params& p, const RegionConstants& c, const Point3& w,
                         double tol, std::size_t horizon) {
  const RegionVerdict v = region_verdict(p, c, w, horizon, Direction::Forward);
  if (!v.escaped()) {
    GreenEstimate est;
    est.horizon_limited = true;
    est.iterations_used = static_cast<int>(v.n);
    return est;
  }
  return refine_affine(p, w, tol, v.n, Direction::Forward);
}

GreenEstimate green_minus(const Params& p, const RegionConstants& c, const Point3& w,
                          double tol, std::size_t horizon) {
  const RegionVerdict v = region_verdict(p, c, w, horizon, Direction::Backward);
  if (!v.escaped()) {
    GreenEstimate est;
    est.horizon_limited = true;
    est.iterations_used = static_cast<int>(v.n);
    return est;
  }
  return refine_affine(p, w, tol, v.n, Direction::Backward);
}

GreenEstimate green_lifted(const Params& p, const ProjPoint& v, Direction dir, double tol,
                           std::size_t horizon) {
  GreenEstimate est;
  ProjPoint cur = v;
  double prev = cur.scale;
  int streak = 0;
  const std::int64_t cap = kOrbitExponentCap >> 2;  // lift squares/cubes exponents
  for (std::size_t n = 1; n <= horizon; ++n) {
    bool representable = true;
    for (const auto& coord : cur.v) {
      representable = representable && std::llabs(coord.exponent()) <= cap;
    }
    if (!representable) break;
    cur = lift_step(p, cur, dir);
    est.residual = std::abs(cur.scale - prev);
    est.iterations_used = static_cast<int>(n);
    est.value = cur.scale;
    prev = cur.scale;
    streak = est.residual < tol ? streak + 1 : 0;
    if (streak >= 3) {
      est.converged = true;
      return est;
    }
  }
  est.horizon_limited = true;
  return est;
}

}  // namespace quadmap
