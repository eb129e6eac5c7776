#include "quadmap/maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "quadmap/errors.hpp"

namespace quadmap {

namespace {

LogMag max_log(LogMag a, LogMag b) { return a < b ? b : a; }

bool exponent_too_big(const ComplexExt& c) {
  return std::llabs(static_cast<long long>(c.exponent())) > kOrbitExponentCap;
}

}  // namespace

LogMag Point3::log_sup() const {
  return max_log(ext_log_mag(x), max_log(ext_log_mag(y), ext_log_mag(z)));
}

Point3 forward_step(const Params& p, const Point3& w) {
  const ComplexExt a = ComplexExt::from_complex(p.a);
  const ComplexExt b = ComplexExt::from_complex(p.b);
  Point3 r;
  r.x = ext_add(ext_mul(w.x, w.y), ext_mul(a, w.z));
  r.y = ext_add(ext_mul(w.x, w.x), ext_mul(b, w.y));
  r.z = w.x;
  return r;
}

Point3 inverse_step(const Params& p, const Point3& w) {
  const ComplexExt a = ComplexExt::from_complex(p.a);
  const ComplexExt b = ComplexExt::from_complex(p.b);
  Point3 r;
  r.x = w.z;
  r.y = ext_div(ext_sub(w.y, ext_mul(w.z, w.z)), b);
  r.z = ext_div(ext_sub(w.x, ext_mul(w.z, r.y)), a);
  return r;
}

ProjPoint ProjPoint::from_affine(const Point3& w) {
  return from_homogeneous({w.x, w.y, w.z, ComplexExt::from_real(1.0)});
}

LogMag ProjPoint::sup_norm_log() const {
  LogMag m = LogMag::ninf();
  for (const auto& c : v) m = m < ext_log_mag(c) ? ext_log_mag(c) : m;
  return m;
}

namespace {

// Divide all coordinates by the magnitude of the largest one: real mantissa
// division plus an exact exponent shift.  Returns ln of that magnitude.
double renormalize_sup(std::array<ComplexExt, 4>& v) {
  int imax = 0;
  LogMag best = LogMag::ninf();
  for (int i = 0; i < 4; ++i) {
    LogMag l = ext_log_mag(v[i]);
    if (best < l) {
      best = l;
      imax = i;
    }
  }
  const double mag = std::abs(v[imax].mantissa());
  const std::int64_t e = v[imax].exponent();
  for (auto& c : v) {
    if (c.is_zero()) continue;
    c = ComplexExt(c.mantissa() / mag, c.exponent() - e);
  }
  return std::log(mag) + static_cast<double>(e) * kLn2;
}

}  // namespace

ProjPoint ProjPoint::from_homogeneous(const std::array<ComplexExt, 4>& coords) {
  ProjPoint p;
  p.v = coords;
  p.scale = renormalize_sup(p.v);
  p.steps = 0;
  return p;
}

ProjPoint lift_step(const Params& p, const ProjPoint& in, Direction dir) {
  const ComplexExt a = ComplexExt::from_complex(p.a);
  const ComplexExt b = ComplexExt::from_complex(p.b);
  const ComplexExt& X = in.v[0];
  const ComplexExt& Y = in.v[1];
  const ComplexExt& Z = in.v[2];
  const ComplexExt& T = in.v[3];

  std::array<ComplexExt, 4> out;
  double d;
  if (dir == Direction::Forward) {
    d = 2.0;
    out[0] = ext_add(ext_mul(X, Y), ext_mul(a, ext_mul(Z, T)));
    out[1] = ext_add(ext_mul(X, X), ext_mul(b, ext_mul(Y, T)));
    out[2] = ext_mul(X, T);
    out[3] = ext_mul(T, T);
  } else {
    d = 3.0;
    const ComplexExt ab = ext_mul(a, b);
    const ComplexExt T2 = ext_mul(T, T);
    const ComplexExt Z2 = ext_mul(Z, Z);
    out[0] = ext_mul(ab, ext_mul(Z, T2));
    out[1] = ext_mul(a, ext_mul(T, ext_sub(ext_mul(Y, T), Z2)));
    out[2] = ext_add(ext_sub(ext_mul(b, ext_mul(X, T2)), ext_mul(Z, ext_mul(Y, T))),
                     ext_mul(Z, Z2));
    out[3] = ext_mul(ab, ext_mul(T2, T));
  }

  bool all_zero = true;
  for (const auto& c : out) all_zero = all_zero && c.is_zero();
  if (all_zero) {
    throw IndeterminacyHit(dir == Direction::Forward
                               ? "lifted image vanished: input on I+ = {t=x=0}"
                               : "lifted image vanished: input on I- = {t=z=0}");
  }

  ProjPoint r;
  r.v = out;
  const double log_c = renormalize_sup(r.v);
  r.steps = in.steps + 1;
  r.scale = in.scale + std::pow(d, -static_cast<double>(r.steps)) * log_c;
  return r;
}

OrbitSeries orbit(const Params& p, const Point3& w, std::size_t n, Direction dir,
                  std::size_t stride) {
  if (stride == 0) stride = 1;
  OrbitSeries s;
  s.direction = dir;
  s.stride = stride;
  s.logmags.reserve(n);
  s.checkpoints.push_back(w);

  Point3 cur = w;
  for (std::size_t k = 0; k < n; ++k) {
    Point3 next = (dir == Direction::Forward) ? forward_step(p, cur) : inverse_step(p, cur);
    if (exponent_too_big(next.x) || exponent_too_big(next.y) || exponent_too_big(next.z)) {
      s.termination = Termination::ExponentOverflow;
      break;
    }
    cur = next;
    s.logmags.push_back({ext_log_mag(cur.x).as_double(), ext_log_mag(cur.y).as_double(),
                         ext_log_mag(cur.z).as_double(), cur.log_sup().as_double()});
    ++s.steps_taken;
    if (s.steps_taken % stride == 0) s.checkpoints.push_back(cur);
  }
  if (s.steps_taken % stride != 0) s.checkpoints.push_back(cur);
  s.final_point = cur;
  return s;
}

}  // namespace quadmap
