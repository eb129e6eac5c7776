#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace quadmap {

/// Complex scalar stored as mantissa * 2^exponent with the mantissa kept at
/// magnitude in [1,2).  The wide exponent survives iteration of quadratic and
/// cubic maps whose coordinates grow like C^(3^n), far beyond double range.
///
/// Zero is canonical: mantissa 0, exponent 0.  Normalization shifts by powers
/// of two only, so the exponent channel is exact.
class ComplexExt {
 public:
  constexpr ComplexExt() = default;

  ComplexExt(std::complex<double> mantissa, std::int64_t exponent) {
    assign(mantissa, exponent);
  }

  static ComplexExt from_complex(std::complex<double> v) { return ComplexExt(v, 0); }
  static ComplexExt from_real(double v) { return ComplexExt({v, 0.0}, 0); }

  std::complex<double> mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }
  bool is_zero() const { return m_.real() == 0.0 && m_.imag() == 0.0; }

  /// Lossy conversion; saturates to +/-inf components outside double range.
  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (e_ > 1030) {
      const double s = std::numeric_limits<double>::infinity();
      return {m_.real() == 0 ? 0.0 : std::copysign(s, m_.real()),
              m_.imag() == 0 ? 0.0 : std::copysign(s, m_.imag())};
    }
    if (e_ < -1080) return {0.0, 0.0};
    const int e = static_cast<int>(e_);
    return {std::ldexp(m_.real(), e), std::ldexp(m_.imag(), e)};
  }

  ComplexExt conj() const {
    ComplexExt r;
    r.m_ = std::conj(m_);
    r.e_ = e_;
    return r;
  }

  ComplexExt operator-() const {
    ComplexExt r;
    r.m_ = -m_;
    r.e_ = e_;
    return r;
  }

  friend bool operator==(const ComplexExt& u, const ComplexExt& v) {
    return u.m_ == v.m_ && u.e_ == v.e_;
  }

 private:
  void assign(std::complex<double> m, std::int64_t e) {
    double mag = std::abs(m);
    if (mag == 0.0 || std::isnan(mag)) {
      m_ = {0.0, 0.0};
      e_ = 0;
      return;
    }
    int k = 0;
    std::frexp(mag, &k);  // mag in [2^(k-1), 2^k)
    int shift = k - 1;
    m = {std::ldexp(m.real(), -shift), std::ldexp(m.imag(), -shift)};
    e += shift;
    // abs() rounding can leave the magnitude a hair outside [1,2)
    mag = std::abs(m);
    while (mag >= 2.0) {
      m *= 0.5;
      e += 1;
      mag = std::abs(m);
    }
    while (mag < 1.0) {
      m *= 2.0;
      e -= 1;
      mag = std::abs(m);
    }
    m_ = m;
    e_ = e;
  }

  std::complex<double> m_{0.0, 0.0};
  std::int64_t e_ = 0;
};

/// Natural log of a magnitude, with an explicit -infinity for log of zero.
struct LogMag {
  double value = 0.0;
  bool neg_inf = false;

  static LogMag ninf() { return {0.0, true}; }
  static LogMag of(double v) { return {v, false}; }

  double as_double() const {
    return neg_inf ? -std::numeric_limits<double>::infinity() : value;
  }

  friend bool operator<(const LogMag& a, const LogMag& b) {
    if (a.neg_inf) return !b.neg_inf;
    if (b.neg_inf) return false;
    return a.value < b.value;
  }
  friend bool operator>(const LogMag& a, const LogMag& b) { return b < a; }
  friend LogMag operator+(const LogMag& a, const LogMag& b) {
    if (a.neg_inf || b.neg_inf) return ninf();
    return of(a.value + b.value);
  }
  friend LogMag operator*(double s, const LogMag& a) {
    if (a.neg_inf) return ninf();
    return of(s * a.value);
  }
};

inline constexpr double kLn2 = 0.6931471805599453094;

// Operands whose exponents differ by more than this are not mixed in
// ext_add; the smaller one is dropped.  Precision contract: per-operation
// relative error stays at double rounding level.
inline constexpr std::int64_t kAddAlignCutoff = 64;

inline ComplexExt ext_mul(const ComplexExt& u, const ComplexExt& v) {
  if (u.is_zero() || v.is_zero()) return {};
  return ComplexExt(u.mantissa() * v.mantissa(), u.exponent() + v.exponent());
}

inline ComplexExt ext_div(const ComplexExt& u, const ComplexExt& v) {
  if (u.is_zero()) return {};
  return ComplexExt(u.mantissa() / v.mantissa(), u.exponent() - v.exponent());
}

inline ComplexExt ext_add(const ComplexExt& u, const ComplexExt& v) {
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  const ComplexExt& big = (u.exponent() >= v.exponent()) ? u : v;
  const ComplexExt& small = (u.exponent() >= v.exponent()) ? v : u;
  const std::int64_t gap = big.exponent() - small.exponent();
  if (gap > kAddAlignCutoff) return big;
  const int g = static_cast<int>(gap);
  const std::complex<double> aligned{std::ldexp(small.mantissa().real(), -g),
                                     std::ldexp(small.mantissa().imag(), -g)};
  return ComplexExt(big.mantissa() + aligned, big.exponent());
}

inline ComplexExt ext_sub(const ComplexExt& u, const ComplexExt& v) {
  return ext_add(u, -v);
}

inline LogMag ext_log_mag(const ComplexExt& u) {
  if (u.is_zero()) return LogMag::ninf();
  return LogMag::of(std::log(std::abs(u.mantissa())) +
                    static_cast<double>(u.exponent()) * kLn2);
}

inline double ext_arg(const ComplexExt& u) { return std::arg(u.mantissa()); }

/// Builds the value e^(log_mag) * e^(i phase) for log magnitudes far
/// outside double range.
inline ComplexExt ext_from_log_polar(double log_mag, double phase) {
  const double e2 = std::floor(log_mag / kLn2);
  const double m = std::exp(log_mag - e2 * kLn2);  // in [1, 2)
  return ComplexExt({m * std::cos(phase), m * std::sin(phase)},
                    static_cast<std::int64_t>(e2));
}

}  // namespace quadmap
