#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "quadmap/complex_ext.hpp"

namespace quadmap {

/// Coefficients of H(x,y,z) = (xy + az, x^2 + by, x).  The map is an
/// automorphism of C^3 iff ab != 0; a = 0 degenerates to the planar model.
struct Params {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{1.0, 0.0};
};

enum class Direction { Forward, Backward };

struct Point3 {
  ComplexExt x, y, z;

  static Point3 from_complex(std::complex<double> x, std::complex<double> y,
                             std::complex<double> z) {
    return {ComplexExt::from_complex(x), ComplexExt::from_complex(y),
            ComplexExt::from_complex(z)};
  }
  /// ln of the sup norm max(|x|,|y|,|z|); -inf at the origin.
  LogMag log_sup() const;
};

/// Sup-norm-normalized vector in C^4 used for iterating the homogeneous
/// lifts on P^3.  `scale` accumulates the d^-(k+1)-weighted logs of the
/// pre-normalization sup norms, so that after n steps
///   scale == d^-n * ln ||lift^n(w)||   (d = 2 forward, 3 backward)
/// when the start was built with from_affine / from_homogeneous.
struct ProjPoint {
  std::array<ComplexExt, 4> v{};  // X, Y, Z, T
  double scale = 0.0;
  int steps = 0;

  static ProjPoint from_affine(const Point3& w);
  static ProjPoint from_homogeneous(const std::array<ComplexExt, 4>& v);
  LogMag sup_norm_log() const;
};

enum class Termination { Completed, IndeterminacyHit, ZeroDivisor, ExponentOverflow };

struct OrbitSeries {
  Direction direction = Direction::Forward;
  std::size_t stride = 1;
  /// One entry per step taken (step 1..n): (ln|x|, ln|y|, ln|z|, ln sup).
  std::vector<std::array<double, 4>> logmags;
  /// Subsampled states at steps 0, stride, 2*stride, ... plus the last state.
  std::vector<Point3> checkpoints;
  Point3 final_point;
  Termination termination = Termination::Completed;
  std::size_t steps_taken = 0;
};

Point3 forward_step(const Params& p, const Point3& w);
Point3 inverse_step(const Params& p, const Point3& w);

/// One renormalized step of the degree-2 forward lift
/// [XY+aZT : X^2+bYT : XT : T^2] or the degree-3 backward lift
/// [abZT^2 : aT(YT-Z^2) : bXT^2-ZYT+Z^3 : abT^3] (the inverse homogenized
/// and cleared of denominators by the factor ab).
/// Throws IndeterminacyHit when the image is the zero vector (input on
/// I+ = {t=x=0} forward, I- = {t=z=0} backward).
ProjPoint lift_step(const Params& p, const ProjPoint& v, Direction dir);

/// Orbit coordinates are stopped before their base-2 exponents can overflow
/// the 64-bit exponent field; a step that would cross this cap terminates
/// the series with ExponentOverflow.
inline constexpr std::int64_t kOrbitExponentCap = std::int64_t{1} << 61;

OrbitSeries orbit(const Params& p, const Point3& w, std::size_t n, Direction dir,
                  std::size_t stride = 1);

}  // namespace quadmap
