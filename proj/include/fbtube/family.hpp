#pragma once
// The two-parameter affine family built from the composed biholomorphism:
// coefficients (U, V) = A(L(Phi(a, b))), the entire function
// F(z, a, b) = U(a, b) + z V(a, b), the differential non-factorization
// obstruction U_b V_a - U_a V_b, and the normality probes for the affine
// family over the coefficient region S.

#include <cstdint>
#include <span>
#include <vector>

#include "fbtube/complex2.hpp"
#include "fbtube/linearize.hpp"

namespace fbtube {

/// Coefficient pair (u, v) = A(L(Phi(a, b))) with the Phi convergence
/// metadata it was produced from. Lies in S for every converged input.
struct CoeffPair {
  Cx u{};
  Cx v{};
  ParamResult phi_meta{};
};

/// Composed coefficient map. Propagates NoConvergence from param_phi.
CoeffPair uv(Cx a, Cx b, double tol = kDefaultParamTol,
             int max_m = kDefaultParamMaxM);

/// F(z, a, b) = U(a, b) + z V(a, b); affine in z for fixed parameters.
Cx eval_F(Cx z, Cx a, Cx b, double tol = kDefaultParamTol,
          int max_m = kDefaultParamMaxM);

/// The obstruction U_b V_a - U_a V_b = -det D(A o L o Phi), computed by the
/// exact chain rule. For this construction it is identically
/// -(1)(-1/625)(1) = 1/625.
Cx wronskian(Cx a, Cx b, double tol = kDefaultParamTol,
             int max_m = kDefaultParamMaxM);

/// Same quantity by central finite differences of (U, V); the independent
/// cross-check used in tests and reports. h is the complex-step size in each
/// parameter.
Cx wronskian_fd(Cx a, Cx b, double h = 1e-3, double tol = kDefaultParamTol,
                int max_m = kDefaultParamMaxM);

/// Obstruction of an arbitrary family z -> F(z, a, b) (affine in z assumed),
/// via finite differences of U = F(0, ., .) and V = F(1, ., .) - F(0, ., .).
template <class Family>
Cx family_wronskian_fd(Family&& f, Cx a, Cx b, double h = 1e-3) {
  const auto slope = [&](Cx aa, Cx bb) {
    return f(Cx(1.0), aa, bb) - f(Cx(0.0), aa, bb);
  };
  const auto offset = [&](Cx aa, Cx bb) { return f(Cx(0.0), aa, bb); };
  const Cx ha(h, 0.0), hb(h, 0.0);
  const Cx ua = (offset(a + ha, b) - offset(a - ha, b)) / (2.0 * h);
  const Cx ub = (offset(a, b + hb) - offset(a, b - hb)) / (2.0 * h);
  const Cx va = (slope(a + ha, b) - slope(a - ha, b)) / (2.0 * h);
  const Cx vb = (slope(a, b + hb) - slope(a, b - hb)) / (2.0 * h);
  return ub * va - ua * vb;
}

/// The explicitly factorable control family z + 5 a^2 + sin(b), whose
/// obstruction vanishes identically.
Cx control_family(Cx z, Cx a, Cx b);

/// Lower-bound check for the large-|v| normality case: over the disk
/// |z| <= R, min |u + v z| = max(0, |u| - |v| R) must dominate
/// |v|^2 - (R + 1)|v| - 1. Holds for every (u, v) in S; rejects (u, v)
/// outside S.
struct Case2Check {
  double lhs = 0.0;  // certified min modulus over the disk (closed form)
  double rhs = 0.0;  // |v|^2 - (R+1)|v| - 1
  bool holds = false;
};
Case2Check case2_lower_bound_check(Cx u, Cx v, double R);

/// Sup of the spherical derivative |v| / (1 + |u + v z|^2) over the given
/// coefficient samples and a polar grid on |z| <= R (the grid includes
/// z = 0). Requires R > 0 and samples in S.
double marty_probe(double R, std::span<const CoeffPair> samples,
                   int n_radii = 64, int n_angles = 64);

/// Demonstrates the two normality cases on explicit coefficient sequences.
enum class SubseqCase { Bounded, Unbounded };

struct SubseqRow {
  int n = 0;
  double metric = 0.0;  // bounded: sup |f_n - f| on the disk; unbounded: min |f_n|
  double bound = 0.0;   // bounded: closed-form bound; unbounded: lower bound
  double chordal_to_inf = 0.0;  // unbounded case: sup chordal(f_n(z), inf)
};

struct SubseqReport {
  SubseqCase kind = SubseqCase::Bounded;
  double R = 1.0;
  std::vector<SubseqRow> rows;  // n = 1, 2, 4, ..., up to n_max
  bool bounds_hold = true;      // every row satisfied its bound
  bool converging = true;       // metric decreasing (bounded) / diverging (unbounded)
};

SubseqReport subsequence_demo(SubseqCase kind, int n_max, double R = 1.0);

}  // namespace fbtube
