#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "quadmap/complex_ext.hpp"

namespace quadmap {

/// The a = 0 reduction H(x,y) = (xy, x^2 + by) on C^2.
struct Point2 {
  ComplexExt x, y;

  static Point2 from_complex(std::complex<double> x, std::complex<double> y) {
    return {ComplexExt::from_complex(x), ComplexExt::from_complex(y)};
  }
};

/// For b^4 = 1 the two lines {y = +-sqrt(-b)} satisfy
/// H^2(x, s) = (s x^3 - b^2 x, b^2 s); they are individually invariant when
/// b^2 = 1 and swapped when b^2 = -1.
struct InvariantLineSet {
  std::complex<double> b;  // snapped to the exact fourth root of unity
  std::array<std::complex<double>, 2> lines;
};

Point2 step2d(std::complex<double> b, const Point2& w);

/// Closed-form second iterate x_2 = xy(x^2+by), y_2 = x^2(y^2+b) + b^2 y.
Point2 step2_closed(std::complex<double> b, const Point2& w);

/// Empty unless |b^4 - 1| <= 1e-12 (b is then snapped to the exact root).
std::optional<InvariantLineSet> invariant_lines(std::complex<double> b);

/// Iterates H^2 on the line y = sqrt(-b) starting at (x0, sqrt(-b)) and
/// returns 3^-n ln|x_{2n}| for n = 0..n_pairs.  Requires b^4 = 1, |x0| > 1.
std::vector<double> sharp_growth_exponent(std::complex<double> b,
                                          std::complex<double> x0, int n_pairs);

}  // namespace quadmap
