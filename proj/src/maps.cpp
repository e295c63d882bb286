#include "fbtube/maps.hpp"

namespace fbtube {

namespace {

void require_finite(const C2Point& z, const char* who) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(who) + ": non-finite input");
  }
}

// (-1/2)^k and (-2)^k as exact doubles.
double signed_pow2(int k, int exponent_sign) {
  const double mag = std::ldexp(1.0, exponent_sign * k);
  return (k & 1) ? -mag : mag;
}

}  // namespace

C2Point apply_f(const C2Point& z) {
  require_finite(z, "apply_f");
  return {z.z2, (z.z2 * z.z2 - z.z1) * 0.5};
}

C2Point apply_g(const C2Point& w) {
  require_finite(w, "apply_g");
  return {w.z1 * w.z1 - 2.0 * w.z2, w.z1};
}

Mat2 jacobian_f(const C2Point& z) {
  require_finite(z, "jacobian_f");
  return {Cx(0.0), Cx(1.0), Cx(-0.5), z.z2};
}

Mat2 jacobian_g(const C2Point& w) {
  require_finite(w, "jacobian_g");
  return {2.0 * w.z1, Cx(-2.0), Cx(1.0), Cx(0.0)};
}

Mat2 linear_part() { return {Cx(0.0), Cx(1.0), Cx(-0.5), Cx(0.0)}; }

Mat2 linear_part_inverse() { return {Cx(0.0), Cx(-2.0), Cx(1.0), Cx(0.0)}; }

Mat2 linear_part_power(int m) {
  if (m < 0) throw std::invalid_argument("linear_part_power: m < 0");
  const double c = signed_pow2(m / 2, -1);  // (-1/2)^k
  Mat2 base = (m & 1) ? linear_part() : Mat2::identity();
  return Cx(c) * base;
}

Mat2 linear_part_inverse_power(int m) {
  if (m < 0) throw std::invalid_argument("linear_part_inverse_power: m < 0");
  const double c = signed_pow2(m / 2, 1);  // (-2)^k
  Mat2 base = (m & 1) ? linear_part_inverse() : Mat2::identity();
  return Cx(c) * base;
}

C2Point apply_linear_part_power(int m, const C2Point& w) {
  require_finite(w, "apply_linear_part_power");
  return linear_part_power(m).apply(w);
}

C2Point apply_L(const C2Point& z) {
  require_finite(z, "apply_L");
  return {z.z2 / 25.0, z.z1 / 25.0};
}

Mat2 jacobian_L() { return {Cx(0.0), Cx(1.0 / 25.0), Cx(1.0 / 25.0), Cx(0.0)}; }

C2Point apply_shear_A(const C2Point& p) {
  require_finite(p, "apply_shear_A");
  return {p.z1 + p.z2 * p.z2, p.z2};
}

C2Point apply_shear_A_inverse(const C2Point& q) {
  require_finite(q, "apply_shear_A_inverse");
  return {q.z1 - q.z2 * q.z2, q.z2};
}

Mat2 jacobian_shear_A(const C2Point& p) {
  require_finite(p, "jacobian_shear_A");
  return {Cx(1.0), 2.0 * p.z2, Cx(0.0), Cx(1.0)};
}

}  // namespace fbtube
