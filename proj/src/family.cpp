#include "fbtube/family.hpp"

#include <algorithm>
#include <cmath>

#include "fbtube/basin.hpp"
#include "fbtube/maps.hpp"

namespace fbtube {

CoeffPair uv(Cx a, Cx b, double tol, int max_m) {
  const ParamResult phi = param_phi(C2Point{a, b}, tol, max_m);
  const C2Point image = apply_shear_A(apply_L(phi.value));
  return {image.z1, image.z2, phi};
}

Cx eval_F(Cx z, Cx a, Cx b, double tol, int max_m) {
  const CoeffPair c = uv(a, b, tol, max_m);
  return c.u + z * c.v;
}

Cx wronskian(Cx a, Cx b, double tol, int max_m) {
  const ParamResult phi = param_phi(C2Point{a, b}, tol, max_m);
  const Mat2 d_phi = jacobian_phi(C2Point{a, b}, tol, max_m);
  const C2Point xy = apply_L(phi.value);
  // D(A o L o Phi) = DA(L(Phi)) DL DPhi; rows are (U_a U_b), (V_a V_b).
  const Mat2 m = jacobian_shear_A(xy) * (jacobian_L() * d_phi);
  return m.b * m.c - m.a * m.d;  // U_b V_a - U_a V_b = -det
}

Cx wronskian_fd(Cx a, Cx b, double h, double tol, int max_m) {
  return family_wronskian_fd(
      [&](Cx z, Cx aa, Cx bb) { return eval_F(z, aa, bb, tol, max_m); }, a, b,
      h);
}

Cx control_family(Cx z, Cx a, Cx b) { return z + 5.0 * a * a + std::sin(b); }

Case2Check case2_lower_bound_check(Cx u, Cx v, double R) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("case2_lower_bound_check: R must be > 0");
  }
  if (!in_S(C2Point{u, v})) {
    throw std::invalid_argument("case2_lower_bound_check: (u, v) not in S");
  }
  // Min modulus of the affine map over the closed disk, in closed form: the
  // image of |z| <= R is the disk of radius |v| R around u.
  const double lhs = std::max(0.0, std::abs(u) - std::abs(v) * R);
  const double av = std::abs(v);
  const double rhs = av * av - (R + 1.0) * av - 1.0;
  return {lhs, rhs, lhs >= rhs - 1e-9};
}

double marty_probe(double R, std::span<const CoeffPair> samples, int n_radii,
                   int n_angles) {
  if (!(R > 0.0)) throw std::invalid_argument("marty_probe: R must be > 0");
  if (n_radii < 2 || n_angles < 1) {
    throw std::invalid_argument("marty_probe: grid too small");
  }
  for (const auto& s : samples) {
    if (!in_S(C2Point{s.u, s.v})) {
      throw std::invalid_argument("marty_probe: sample not in S");
    }
  }
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double sup = 0.0;
  for (const auto& s : samples) {
    for (int i = 0; i < n_radii; ++i) {
      const double r = R * static_cast<double>(i) / (n_radii - 1);
      for (int j = 0; j < n_angles; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / n_angles;
        const Cx z(r * std::cos(theta), r * std::sin(theta));
        sup = std::max(sup, spherical_derivative_affine(s.u, s.v, z));
        if (i == 0) break;  // r == 0: all angles coincide
      }
    }
  }
  return sup;
}

SubseqReport subsequence_demo(SubseqCase kind, int n_max, double R) {
  if (n_max < 1) throw std::invalid_argument("subsequence_demo: n_max < 1");
  if (!(R > 0.0)) throw std::invalid_argument("subsequence_demo: R <= 0");

  SubseqReport rep;
  rep.kind = kind;
  rep.R = R;

  std::vector<int> ns;
  for (int n = 1; n <= n_max; n *= 2) ns.push_back(n);
  if (ns.back() != n_max) ns.push_back(n_max);

  if (kind == SubseqCase::Bounded) {
    // v_n = 1 + 1/n, delta_n = 0, u_n = v_n^2 -> limit map z + 1.
    const double u_lim = 1.0, v_lim = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int n : ns) {
      const double vn = 1.0 + 1.0 / n;
      const double un = vn * vn;
      // sup over |z| <= R of |(un - u) + z (vn - v)| in closed form.
      const double metric = std::abs(un - u_lim) + R * std::abs(vn - v_lim);
      const double bound = (1.0 / n) * (2.0 + 1.0 / n + R) + 1e-15;
      SubseqRow row{n, metric, bound, 0.0};
      rep.rows.push_back(row);
      rep.bounds_hold = rep.bounds_hold && metric <= bound;
      rep.converging = rep.converging && metric < prev;
      prev = metric;
    }
    return rep;
  }

  // Unbounded case: |v_n| = n with admissible delta_n of modulus (1 + n)/2,
  // phase stepped deterministically.
  double prev = -std::numeric_limits<double>::infinity();
  for (int n : ns) {
    const double vn = static_cast<double>(n);
    const double phase = 2.39996322972865332 * n;  // golden angle
    const Cx delta =
        0.5 * (1.0 + vn) * Cx(std::cos(phase), std::sin(phase));
    const Cx un = Cx(vn * vn, 0.0) + delta;
    const double metric = std::max(0.0, std::abs(un) - vn * R);
    const double bound = vn * vn - (R + 1.0) * vn - 1.0;
    const double chordal =
        chordal_distance(ExtComplex(Cx(metric, 0.0)), ExtComplex::infinity());
    SubseqRow row{n, metric, bound, chordal};
    rep.rows.push_back(row);
    rep.bounds_hold = rep.bounds_hold && metric >= bound - 1e-9;
    if (n > 4) {  // divergence kicks in once n^2 dominates
      rep.converging = rep.converging && metric > prev;
      prev = metric;
    }
  }
  return rep;
}

}  // namespace fbtube
