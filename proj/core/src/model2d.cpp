#include "quadmap/model2d.hpp"

#include <cmath>
#include <stdexcept>

namespace quadmap {

Point2 step2d(std::complex<double> b, const Point2& w) {
  const ComplexExt bb = ComplexExt::from_complex(b);
  Point2 r;
  r.x = ext_mul(w.x, w.y);
  r.y = ext_add(ext_mul(w.x, w.x), ext_mul(bb, w.y));
  return r;
}

Point2 step2_closed(std::complex<double> b, const Point2& w) {
  const ComplexExt bb = ComplexExt::from_complex(b);
  const ComplexExt x2 = ext_mul(w.x, w.x);
  const ComplexExt y2 = ext_mul(w.y, w.y);
  Point2 r;
  r.x = ext_mul(ext_mul(w.x, w.y), ext_add(x2, ext_mul(bb, w.y)));
  r.y = ext_add(ext_mul(x2, ext_add(y2, bb)), ext_mul(ext_mul(bb, bb), w.y));
  return r;
}

std::optional<InvariantLineSet> invariant_lines(std::complex<double> b) {
  const std::complex<double> b2 = b * b;
  if (std::abs(b2 * b2 - 1.0) > 1e-12) return std::nullopt;
  // snap to the exact fourth root of unity
  static const std::complex<double> roots[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::complex<double> snapped = roots[0];
  for (const auto& r : roots) {
    if (std::abs(b - r) < std::abs(b - snapped)) snapped = r;
  }
  InvariantLineSet set;
  set.b = snapped;
  // avoid the sqrt branch cut landing on -0i for real roots
  std::complex<double> neg = -snapped;
  if (neg.imag() == 0.0) neg = {neg.real(), 0.0};
  const std::complex<double> s = std::sqrt(neg);
  set.lines = {s, -s};
  return set;
}

std::vector<double> sharp_growth_exponent(std::complex<double> b,
                                          std::complex<double> x0, int n_pairs) {
  const auto lines = invariant_lines(b);
  if (!lines) throw std::invalid_argument("sharp_growth_exponent requires b^4 = 1");
  if (!(std::abs(x0) > 1.0)) {
    throw std::invalid_argument("sharp_growth_exponent requires |x0| > 1");
  }
  Point2 w{ComplexExt::from_complex(x0), ComplexExt::from_complex(lines->lines[0])};
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(n_pairs) + 1);
  double weight = 1.0;
  seq.push_back(ext_log_mag(w.x).as_double());
  for (int n = 1; n <= n_pairs; ++n) {
    w = step2_closed(lines->b, w);
    weight /= 3.0;
    seq.push_back(weight * ext_log_mag(w.x).as_double());
  }
  return seq;
}

}  // namespace quadmap
