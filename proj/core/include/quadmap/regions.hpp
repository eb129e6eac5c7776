#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadmap/maps.hpp"

namespace quadmap {

/// Constants governing the trapping regions
///   V+ = { |z| > max(R+, |x|, (1+delta)|y|^(1/2)) }
///   V- = { |xy| > max(R-, 2|az|, |x|^(3/2), (1/eps)|y|^(3/2)) }
/// together with the derived theta, C1, C2 of the backward cubic bound
/// C1|z|^3 < |z_1| < C2|z|^3.
struct RegionConstants {
  double r_plus = 10.0;
  double delta = 0.5;
  double alpha = 0.0;
  double r_minus = 0.0;
  double epsilon = 0.0;

  // derived
  double theta = 0.0;  // alpha + (1+delta)^-2
  double c1 = 0.0;     // (1-theta)/|ab|
  double c2 = 0.0;     // (1+theta)/|ab|
  double abs_a = 1.0;
  double abs_b = 1.0;
  bool kminus_bound_applies = false;

  void recompute_derived();
};

struct ConstantOverrides {
  std::optional<double> r_plus, delta, alpha, r_minus, epsilon;
};

/// Defaults: delta = |b|-1 if |b|>1 else 0.5; alpha = (1-(1+delta)^-2)/2;
/// R+ = max(10, 2*sqrt(|b|/alpha)); epsilon = largest grid value in
/// {0.50, 0.45, ..., 0.05} satisfying
///   eps^3 (3/2)^(3/2) <= (1-|b|eps^2)/2,
///   eps (1+|b|eps^2)^(3/2) <= (1-|b|eps^2)/2,
///   (1-|b|eps^2) > 4|a| eps^10;
/// R- = 2/eps^10.  Overrides are applied and then revalidated.
/// Throws InvalidConstants / NoFeasibleEpsilon.
RegionConstants choose_constants(const Params& p, const ConstantOverrides& ov = {});

/// Revalidates an arbitrary constants tuple; returns the violated
/// inequality description, or nothing when valid.
std::optional<std::string> validate_constants(const RegionConstants& c);

/// Membership predicates.  All comparisons are strict and evaluated in
/// log-magnitude space, so points with coordinates far outside double
/// range classify correctly.
bool in_v_plus(const Point3& w, const RegionConstants& c);
bool in_v_minus(const Point3& w, const RegionConstants& c);

struct RegionVerdict {
  enum class Kind { InUPlus, InUMinus, KPlusUpToHorizon, KMinusUpToHorizon };
  Kind kind = Kind::KPlusUpToHorizon;
  std::size_t n = 0;  // first trap-entry step, or the horizon reached

  bool escaped() const { return kind == Kind::InUPlus || kind == Kind::InUMinus; }
};

/// Forward: least n <= horizon with H^n(w) in V-, else K+ up to horizon.
/// Backward: least n with H^-n(w) in V+, else K- up to horizon.
RegionVerdict region_verdict(const Params& p, const RegionConstants& c, const Point3& w,
                             std::size_t horizon, Direction dir);

/// M_k = max(R-, 2|a z_k|, |x_k|^(3/2), (1/eps)|y_k|^(3/2)) along the forward
/// orbit, in natural-log scale, plus the certified recursion constant and
/// the envelope base m_tilde with ln M_n <= (sqrt 3)^n ln m_tilde.
struct GrowthEnvelope {
  std::vector<double> log_m;  // ln M_0 .. ln M_n
  double log_m_tilde = 0.0;
  double c_tilde = 0.0;
};

GrowthEnvelope m_sequence(const Params& p, const RegionConstants& c, const Point3& w,
                          std::size_t n);

}  // namespace quadmap
