#pragma once
// Points and 2x2 matrices over C^2, the weighted norm in which the basin map
// contracts, and spherical-metric helpers for the normality probes.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fbtube {

using Cx = std::complex<double>;

inline bool is_finite(Cx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A point of C^2.
struct C2Point {
  Cx z1{0.0, 0.0};
  Cx z2{0.0, 0.0};

  C2Point() = default;
  C2Point(Cx a, Cx b) : z1(a), z2(b) {}
  C2Point(double a, double b) : z1(a, 0.0), z2(b, 0.0) {}
};

inline bool is_finite(const C2Point& p) {
  return is_finite(p.z1) && is_finite(p.z2);
}

inline C2Point operator+(const C2Point& a, const C2Point& b) {
  return {a.z1 + b.z1, a.z2 + b.z2};
}
inline C2Point operator-(const C2Point& a, const C2Point& b) {
  return {a.z1 - b.z1, a.z2 - b.z2};
}
inline C2Point operator*(Cx s, const C2Point& p) {
  return {s * p.z1, s * p.z2};
}

// Complex modulus as sqrt(re^2 + im^2), deliberately not std::abs/hypot:
// the SIMD orbit kernels evaluate exactly this expression, and the weighted
// norm must agree with them bit for bit.
inline double modulus_plain(double re, double im) {
  return std::sqrt(re * re + im * im);
}
inline double modulus_plain(Cx z) { return modulus_plain(z.real(), z.imag()); }

/// Raw weighted norm max(3/4 |z1|, |z2|) on unpacked coordinates.
/// Ties resolve to the second operand, matching _mm256_max_pd.
inline double weighted_norm_raw(double z1r, double z1i, double z2r, double z2i) {
  const double a = 0.75 * modulus_plain(z1r, z1i);
  const double b = modulus_plain(z2r, z2i);
  return a > b ? a : b;
}

/// Weighted norm max(3/4 |z1|, |z2|); zero iff z = 0, homogeneous of degree 1.
/// Rejects non-finite input.
double weighted_norm(const C2Point& z);

/// 2x2 complex matrix, row-major: rows (a b), (c d).
struct Mat2 {
  Cx a, b, c, d;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Cx det() const { return a * d - b * c; }

  C2Point apply(const C2Point& p) const {
    return {a * p.z1 + b * p.z2, c * p.z1 + d * p.z2};
  }
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Mat2 operator*(Cx s, const Mat2& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}
inline Mat2 operator-(const Mat2& m, const Mat2& n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}

/// Maximum entry modulus, for closeness checks.
inline double max_entry_abs(const Mat2& m) {
  return std::max(std::max(modulus_plain(m.a), modulus_plain(m.b)),
                  std::max(modulus_plain(m.c), modulus_plain(m.d)));
}

/// Point of the Riemann sphere: a finite complex number or infinity.
/// Only the chordal metric consumes this type.
struct ExtComplex {
  Cx value{0.0, 0.0};
  bool infinite = false;

  ExtComplex() = default;
  ExtComplex(Cx z) : value(z) {}
  static ExtComplex infinity() {
    ExtComplex e;
    e.infinite = true;
    return e;
  }
};

/// Chordal metric on the Riemann sphere: symmetric, zero iff equal, <= 2.
/// chordal(p, q) = 2|p - q| / (sqrt(1+|p|^2) sqrt(1+|q|^2)), chordal(p, inf) =
/// 2 / sqrt(1+|p|^2). Rejects NaN in finite inputs.
double chordal_distance(const ExtComplex& p, const ExtComplex& q);

/// Spherical derivative of the affine map z -> u + v z at z:
/// |v| / (1 + |u + v z|^2). The Marty-criterion probe for the affine family.
double spherical_derivative_affine(Cx u, Cx v, Cx z);

}  // namespace fbtube
