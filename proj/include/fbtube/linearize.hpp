#pragma once
// Numerical linearization at the attracting fixed point and the basin
// parametrization.
//
//   sigma_m  = Df(0)^{-m} o f^m      -> conjugacy sigma on the basin,
//   phi_m    = g^m o Df(0)^m         -> parametrization Phi of the basin,
//
// each iterated until the successive-approximation gap in the weighted norm
// drops below tol. Phi is computed by the direct limit (not by Newton
// inversion of sigma) so every approximant is an exact polynomial map whose
// chain-rule Jacobian telescopes: det Dg = 2 and det Df(0)^m = 2^{-m} give
// det DPhi_m == 1 identically.

#include <stdexcept>

#include "fbtube/complex2.hpp"

namespace fbtube {

inline constexpr double kDefaultParamTol = 1e-10;
inline constexpr int kDefaultParamMaxM = 120;

struct NotAttracted : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoConvergence : std::runtime_error {
  int iterations_used;
  double last_gap;
  NoConvergence(const std::string& what, int iters, double gap)
      : std::runtime_error(what), iterations_used(iters), last_gap(gap) {}
};

struct ParamResult {
  C2Point value{};
  int iterations_used = 0;
  double cauchy_gap = 0.0;          // weighted norm of the last gap, < tol
  double conjugacy_residual = 0.0;  // functional-equation defect, see below
};

/// Conjugacy sigma(z) = lim Df(0)^{-m} f^m(z), for z in the basin.
/// Satisfies sigma(f(z)) = Df(0) sigma(z); the reported residual is the
/// weighted norm of that defect at the returned truncation order.
/// Throws NotAttracted when classify_point(z) is not Attracted, NoConvergence
/// when max_m is reached with gap >= tol.
ParamResult sigma(const C2Point& z, double tol = kDefaultParamTol,
                  int max_m = kDefaultParamMaxM);

/// Basin parametrization Phi(w) = lim g^m(Df(0)^m w). Satisfies
/// Phi(Df(0) w) = f(Phi(w)); the residual reports that defect at the
/// returned truncation order. Throws NoConvergence when max_m is reached
/// (expected for very large |w| at small tol).
ParamResult param_phi(const C2Point& w, double tol = kDefaultParamTol,
                      int max_m = kDefaultParamMaxM);

/// Phi_m(w) for a fixed truncation order m (no stopping rule); mainly for
/// residual evaluation and tests.
C2Point phi_fixed_order(const C2Point& w, int m);

/// Chain-rule Jacobian of the converged Phi approximant:
/// DPhi_m(w) = Dg(x_{m-1}) ... Dg(x_0) Df(0)^m along the orbit
/// x_0 = Df(0)^m w, x_{k+1} = g(x_k). Its determinant is 1 up to rounding.
/// Converges with the same stopping rule as param_phi.
Mat2 jacobian_phi(const C2Point& w, double tol = kDefaultParamTol,
                  int max_m = kDefaultParamMaxM);

}  // namespace fbtube
