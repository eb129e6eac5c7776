#pragma once

#include <array>
#include <complex>
#include <vector>

#include "quadmap/maps.hpp"
#include "quadmap/regions.hpp"

namespace quadmap {

/// Growth taxonomy of an orbit: bounded, ||w_n|| ~ e^(rate*n), or
/// super-exponential ||w_n|| ~ C^(base^n).
struct OrbitClass {
  enum class Kind { Bounded, LinearExponential, SuperExponential, HorizonLimited };
  Kind kind = Kind::HorizonLimited;
  double sup_norm = 0.0;    // Bounded: ln of the orbit sup
  double rate = 0.0;        // LinearExponential: slope of ln||w_n||
  double base = 0.0;        // SuperExponential: e^(slope of ln ln||w_n||)
  double confidence = 0.0;  // regression R^2 of the accepted fit
};

/// Distinguished points and lines at infinity, in normalized homogeneous form.
struct SpecialLoci {
  enum Index { P = 0, Q = 1, Xm = 2, IPlus = 3, ITop = 4, IMinus = 5, kCount = 6 };
  static const char* name(int i);
};

/// Chordal distance sqrt(1 - |<u,v>|^2 / (||u||^2 ||v||^2)) on P^3.
double chordal_distance(const std::array<std::complex<double>, 4>& u,
                        const std::array<std::complex<double>, 4>& v);

/// Distance from a projective point to each special locus (for the lines,
/// the distance to the closest point of the line).
std::array<double, SpecialLoci::kCount> loci_distances(
    const std::array<std::complex<double>, 4>& u);

struct Cluster {
  std::array<std::complex<double>, 4> representative{};  // unit Euclidean norm
  double visit_fraction = 0.0;
  std::array<double, SpecialLoci::kCount> loci_distance{};
};

struct ClusterReport {
  std::vector<Cluster> clusters;
  std::size_t tail_samples = 0;
};

/// Classifies growth over `horizon` steps.  Bounded when the tail sup stays
/// under max(10 R, 10 ||w||); otherwise the tail window of deep samples is
/// fitted, ln ln ||w_n|| first (super-exponential) and ln ||w_n|| second.
OrbitClass classify_orbit(const Params& p, const RegionConstants& c, const Point3& w,
                          std::size_t horizon, Direction dir);

/// Projectivizes the orbit tail as [w_n : 1] and greedily merges points
/// within chordal distance merge_tol, in orbit order.
ClusterReport cluster_points(const Params& p, const Point3& w, std::size_t horizon,
                             double merge_tol, Direction dir = Direction::Forward);

}  // namespace quadmap
