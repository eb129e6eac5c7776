#pragma once

#include "quadmap/maps.hpp"
#include "quadmap/regions.hpp"

namespace quadmap {

struct GreenEstimate {
  double value = 0.0;
  int iterations_used = 0;
  bool converged = false;
  double residual = 0.0;      // last successive difference
  bool horizon_limited = false;  // no trap entry within horizon: "0 (unresolved)"
};

/// G+(w) = lim 2^-n log+ |x_n| along the forward orbit.  Escape-first: the
/// region verdict is computed up to `horizon`; K+-at-horizon points return
/// value 0 with horizon_limited set, escaped points are refined until three
/// consecutive successive differences fall below tol.
GreenEstimate green_plus(const Params& p, const RegionConstants& c, const Point3& w,
                         double tol, std::size_t horizon);

/// G-(w) = lim 3^-n log+ |z_n| along the backward orbit.
GreenEstimate green_minus(const Params& p, const RegionConstants& c, const Point3& w,
                          double tol, std::size_t horizon);

/// Normalized log-norm limit of the renormalized lifted iteration,
/// d^-n ln ||lift^n(v)||.  On affine points (T != 0) the forward estimate
/// agrees with green_plus; the backward lift carries the documented constant
/// factor ab, which shifts the limit by ln|ab|/2 relative to green_minus.
/// Throws IndeterminacyHit when the orbit lands on the indeterminacy locus.
GreenEstimate green_lifted(const Params& p, const ProjPoint& v, Direction dir, double tol,
                           std::size_t horizon);

}  // namespace quadmap
