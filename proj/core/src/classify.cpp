#include "quadmap/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quadmap {

namespace {

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  Fit f;
  const std::size_t n = xs.size();
  if (n < 2) return f;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

// Gate for the ln ln fit: only samples this deep are well-conditioned.
constexpr double kLogGate = 10.0;
constexpr std::size_t kMinFitSamples = 8;
constexpr double kSuperExpMinSlope = 0.05;  // base must exceed e^0.05

}  // namespace

const char* SpecialLoci::name(int i) {
  switch (i) {
    case P: return "P=[0:1:0:0]";
    case Q: return "Q=[1:0:0:0]";
    case Xm: return "[0:0:1:0]";
    case IPlus: return "I+={t=x=0}";
    case ITop: return "{t=y=0}";
    case IMinus: return "I-={t=z=0}";
    default: return "?";
  }
}

double chordal_distance(const std::array<std::complex<double>, 4>& u,
                        const std::array<std::complex<double>, 4>& v) {
  std::complex<double> dot{0.0, 0.0};
  double nu = 0.0, nv = 0.0;
  for (int i = 0; i < 4; ++i) {
    dot += u[i] * std::conj(v[i]);
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  const double c2 = std::norm(dot) / (nu * nv);
  return std::sqrt(std::max(0.0, 1.0 - c2));
}

std::array<double, SpecialLoci::kCount> loci_distances(
    const std::array<std::complex<double>, 4>& u) {
  const double n2 = std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]) + std::norm(u[3]);
  auto point_dist = [&](int axis) {
    return std::sqrt(std::max(0.0, 1.0 - std::norm(u[axis]) / n2));
  };
  auto line_dist = [&](int dropped1, int dropped2) {
    return std::sqrt(
        std::max(0.0, (std::norm(u[dropped1]) + std::norm(u[dropped2])) / n2));
  };
  std::array<double, SpecialLoci::kCount> d{};
  d[SpecialLoci::P] = point_dist(1);
  d[SpecialLoci::Q] = point_dist(0);
  d[SpecialLoci::Xm] = point_dist(2);
  d[SpecialLoci::IPlus] = line_dist(0, 3);
  d[SpecialLoci::ITop] = line_dist(1, 3);
  d[SpecialLoci::IMinus] = line_dist(2, 3);
  return d;
}

OrbitClass classify_orbit(const Params& p, const RegionConstants& c, const Point3& w,
                          std::size_t horizon, Direction dir) {
  OrbitClass res;
  const OrbitSeries series = orbit(p, w, horizon, dir, horizon);  // logmags only

  std::vector<double> ns{0.0};
  std::vector<double> lsup{w.log_sup().as_double()};
  for (std::size_t i = 0; i < series.logmags.size(); ++i) {
    ns.push_back(static_cast<double>(i + 1));
    lsup.push_back(series.logmags[i][3]);
  }

  const std::size_t total = lsup.size();
  const double r = dir == Direction::Forward ? c.r_minus : c.r_plus;
  const double bound = std::log(10.0 * std::max(r, std::exp(w.log_sup().as_double())));
  double tail_max = -std::numeric_limits<double>::infinity();
  double all_max = tail_max;
  for (std::size_t i = 0; i < total; ++i) {
    all_max = std::max(all_max, lsup[i]);
    if (i >= total / 2) tail_max = std::max(tail_max, lsup[i]);
  }
  if (tail_max <= bound && series.termination == Termination::Completed) {
    res.kind = OrbitClass::Kind::Bounded;
    res.sup_norm = std::isfinite(all_max) ? std::exp(all_max) : 0.0;
    return res;
  }

  std::vector<double> gn, gl;
  for (std::size_t i = 0; i < total; ++i) {
    if (lsup[i] > kLogGate) {
      gn.push_back(ns[i]);
      gl.push_back(lsup[i]);
    }
  }
  if (gn.size() < kMinFitSamples) {
    res.kind = OrbitClass::Kind::HorizonLimited;
    return res;
  }
  // drop the shallow leading quarter of the gated window
  const std::size_t drop = gn.size() / 4;
  gn.erase(gn.begin(), gn.begin() + static_cast<long>(drop));
  gl.erase(gl.begin(), gl.begin() + static_cast<long>(drop));

  std::vector<double> loglog(gl.size());
  for (std::size_t i = 0; i < gl.size(); ++i) loglog[i] = std::log(gl[i]);
  const Fit super = least_squares(gn, loglog);
  if (super.r2 >= 0.999 && super.slope > kSuperExpMinSlope) {
    res.kind = OrbitClass::Kind::SuperExponential;
    res.base = std::exp(super.slope);
    res.confidence = super.r2;
    return res;
  }
  const Fit lin = least_squares(gn, gl);
  if (lin.r2 >= 0.9) {
    res.kind = OrbitClass::Kind::LinearExponential;
    res.rate = lin.slope;
    res.confidence = lin.r2;
    return res;
  }
  res.kind = OrbitClass::Kind::HorizonLimited;
  return res;
}

namespace {

std::array<std::complex<double>, 4> projectivize(const Point3& w) {
  std::array<ComplexExt, 4> v{w.x, w.y, w.z, ComplexExt::from_real(1.0)};
  int imax = 0;
  LogMag best = LogMag::ninf();
  for (int i = 0; i < 4; ++i) {
    const LogMag l = ext_log_mag(v[i]);
    if (best < l) {
      best = l;
      imax = i;
    }
  }
  const double mag = std::abs(v[imax].mantissa());
  const std::int64_t e = v[imax].exponent();
  std::array<std::complex<double>, 4> out;
  double n2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    out[i] = v[i].is_zero()
                 ? std::complex<double>{0.0, 0.0}
                 : ComplexExt(v[i].mantissa() / mag, v[i].exponent() - e).to_complex();
    n2 += std::norm(out[i]);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : out) c *= inv;
  return out;
}

}  // namespace

ClusterReport cluster_points(const Params& p, const Point3& w, std::size_t horizon,
                             double merge_tol, Direction dir) {
  ClusterReport report;
  const OrbitSeries series = orbit(p, w, horizon, dir, 1);
  const std::size_t taken = series.steps_taken;
  const std::size_t tail_start = taken / 2;

  for (std::size_t n = tail_start; n < series.checkpoints.size(); ++n) {
    const auto q = projectivize(series.checkpoints[n]);
    ++report.tail_samples;
    bool merged = false;
    for (auto& cl : report.clusters) {
      if (chordal_distance(cl.representative, q) <= merge_tol) {
        cl.visit_fraction += 1.0;
        merged = true;
        break;
      }
    }
    if (!merged) {
      Cluster cl;
      cl.representative = q;
      cl.visit_fraction = 1.0;
      cl.loci_distance = loci_distances(q);
      report.clusters.push_back(cl);
    }
  }
  for (auto& cl : report.clusters) {
    cl.visit_fraction /= static_cast<double>(std::max<std::size_t>(1, report.tail_samples));
  }
  return report;
}

}  // namespace quadmap
