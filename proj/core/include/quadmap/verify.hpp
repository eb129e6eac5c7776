#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quadmap/green.hpp"
#include "quadmap/maps.hpp"
#include "quadmap/regions.hpp"

namespace quadmap {

struct FailureCase {
  Point3 point;
  double margin = 0.0;  // violated slack, log units (negative)
  std::string detail;
};

struct VerifyReport {
  std::string property;
  std::uint64_t seed = 0;
  int attempted = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;          // unresolved samples (green suite)
  double worst_margin = 0;  // tightest slack seen, log units; +inf when vacuous
  Params params;
  RegionConstants constants;
  std::vector<FailureCase> failures;
};

/// Trap samplers: log-uniform magnitudes over a 20-log-unit band above the
/// region threshold per dominant coordinate, uniform phases, rejection
/// against the membership predicate.
Point3 sample_v_plus(const RegionConstants& c, std::mt19937_64& rng);
Point3 sample_v_minus(const RegionConstants& c, std::mt19937_64& rng);

/// Rejection-samples points of the given K-side verdict from a small ball;
/// may return fewer than `count` when the attempt budget runs out.
std::vector<Point3> sample_k_side(const Params& p, const RegionConstants& c,
                                  std::size_t count, std::size_t horizon, Direction dir,
                                  std::mt19937_64& rng);

/// H(V-) in V- plus |xy|/2 < |x_1| < 3|xy|/2 and
/// (1-|b|eps^2)|x|^2 < |y_1| < (1+|b|eps^2)|x|^2 on sampled V- points.
VerifyReport verify_trap_forward(const Params& p, const RegionConstants& c, int samples,
                                 std::uint64_t seed, int workers = 1);

/// H^-1(V+) in V+ plus C1|z|^3 < |z_1| < C2|z|^3 on sampled V+ points.
VerifyReport verify_trap_backward(const Params& p, const RegionConstants& c, int samples,
                                  std::uint64_t seed, int workers = 1);

/// Backward orbits of K--verdict samples stay bounded (running-max
/// stabilization) with conditional M_n monotonicity.  Requires |b| > 1
/// (throws NotApplicable otherwise).
VerifyReport verify_kminus_bounded(const Params& p, const RegionConstants& c, int samples,
                                   std::size_t horizon, std::uint64_t seed,
                                   int workers = 1);

/// |G+(H(w)) - 2 G+(w)| <= 10 tol and |G-(H^-1(w)) - 3 G-(w)| <= 10 tol on
/// converged estimates; `samples` points per direction.
VerifyReport verify_green_functional(const Params& p, const RegionConstants& c,
                                     int samples, double tol, std::uint64_t seed,
                                     int workers = 1);

/// The four growth-envelope bounds along forward orbits of K+-verdict
/// samples, with the recorded constants c_tilde and m_tilde.
VerifyReport verify_growth_envelope(const Params& p, const RegionConstants& c, int samples,
                                    std::size_t horizon, std::uint64_t seed,
                                    int workers = 1);

/// Deterministic JSON rendering (byte-identical for identical inputs).
/// Extended-range coordinates are serialized as {re, im, exp10} with the
/// value (re + i im) * 10^exp10 and max(|re|,|im|) in [1,10).
std::string report_to_json(const VerifyReport& report);
std::string reports_to_json(const std::vector<VerifyReport>& reports);

}  // namespace quadmap
