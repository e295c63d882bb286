#pragma once
// The concrete automorphisms of the construction: the quadratic map f with
// polynomial inverse g, the linear part of f at its attracting fixed point,
// the rescaling L, and the shear A, together with their analytic Jacobians.
//
// Jacobians are hand-differentiated; finite differences are used only as a
// cross-check in tests, so the determinant identities (det Df = 1/2,
// det Dg = 2, det DA = 1) hold to the last bit.

#include "fbtube/complex2.hpp"

namespace fbtube {

/// f(z1, z2) = (z2, (z2^2 - z1) / 2). Fixes the origin, contracts the
/// weighted norm by 3/4 on the local basin.
C2Point apply_f(const C2Point& z);

/// g = f^{-1}: g(w1, w2) = (w1^2 - 2 w2, w1).
C2Point apply_g(const C2Point& w);

/// Df(z): rows (0, 1), (-1/2, z2). det == 1/2 for every z.
Mat2 jacobian_f(const C2Point& z);

/// Dg(w): rows (2 w1, -2), (1, 0). det == 2 for every w.
Mat2 jacobian_g(const C2Point& w);

/// Df at the origin: rows (0, 1), (-1/2, 0). Squares to -1/2 I.
Mat2 linear_part();

/// Df(0)^{-1}: rows (0, -2), (1, 0).
Mat2 linear_part_inverse();

/// Df(0)^m in closed form: Df(0)^{2k} = (-1/2)^k I and
/// Df(0)^{2k+1} = (-1/2)^k Df(0). Exact powers of two, no error buildup.
/// Requires m >= 0.
Mat2 linear_part_power(int m);

/// Df(0)^{-m} in closed form, m >= 0.
Mat2 linear_part_inverse_power(int m);

/// Df(0)^m applied to w via the closed form.
C2Point apply_linear_part_power(int m, const C2Point& w);

/// L(z1, z2) = (z2/25, z1/25). det DL == -1/625.
C2Point apply_L(const C2Point& z);
Mat2 jacobian_L();

/// Shear A(x, y) = (x + y^2, y). det DA == 1 everywhere.
C2Point apply_shear_A(const C2Point& p);

/// A^{-1}(u, v) = (u - v^2, v).
C2Point apply_shear_A_inverse(const C2Point& q);

/// DA at (x, y): rows (1, 2y), (0, 1).
Mat2 jacobian_shear_A(const C2Point& p);

}  // namespace fbtube
