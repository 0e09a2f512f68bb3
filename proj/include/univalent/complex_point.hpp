#pragma once

#include <cmath>

namespace univalent {

/// A point of the complex plane. Arithmetic is spelled out on the real and
/// imaginary parts so rounding does not depend on std::complex.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  friend constexpr ComplexPoint operator+(ComplexPoint a, ComplexPoint b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr ComplexPoint operator-(ComplexPoint a, ComplexPoint b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr ComplexPoint operator-(ComplexPoint a) { return {-a.re, -a.im}; }
  friend constexpr ComplexPoint operator*(ComplexPoint a, ComplexPoint b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr ComplexPoint operator*(double s, ComplexPoint a) {
    return {s * a.re, s * a.im};
  }
  friend ComplexPoint operator/(ComplexPoint a, ComplexPoint b) {
    // Smith's algorithm.
    if (std::abs(b.re) >= std::abs(b.im)) {
      const double r = b.im / b.re;
      const double d = b.re + b.im * r;
      return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    const double r = b.re / b.im;
    const double d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
  }
  friend constexpr bool operator==(ComplexPoint, ComplexPoint) = default;
};

inline double modulus(ComplexPoint z) { return std::hypot(z.re, z.im); }

inline constexpr ComplexPoint conjugate(ComplexPoint z) { return {z.re, -z.im}; }

/// e^{i t}
inline ComplexPoint unit_point(double t) { return {std::cos(t), std::sin(t)}; }

/// z^k for k >= 0 by binary powering.
inline ComplexPoint power(ComplexPoint z, unsigned k) {
  ComplexPoint result{1.0, 0.0};
  while (k != 0) {
    if (k & 1u) result = result * z;
    z = z * z;
    k >>= 1u;
  }
  return result;
}

}  // namespace univalent
