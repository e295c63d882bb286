#include "fbtube/linearize.hpp"

#include <sstream>

#include "fbtube/basin.hpp"
#include "fbtube/maps.hpp"

namespace fbtube {

namespace {

void require_params(double tol, int max_m, const char* who) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": tol must be > 0");
  }
  if (max_m < 1) {
    throw std::invalid_argument(std::string(who) + ": max_m must be >= 1");
  }
}

[[noreturn]] void no_convergence(const char* who, int m, double gap) {
  std::ostringstream os;
  os << who << ": gap " << gap << " >= tol after " << m << " iterations";
  throw NoConvergence(os.str(), m, gap);
}

}  // namespace

C2Point phi_fixed_order(const C2Point& w, int m) {
  C2Point x = apply_linear_part_power(m, w);
  for (int k = 0; k < m; ++k) x = apply_g(x);
  return x;
}

ParamResult sigma(const C2Point& z, double tol, int max_m) {
  require_params(tol, max_m, "sigma");
  if (!is_finite(z)) throw std::invalid_argument("sigma: non-finite input");
  if (classify_point(z).status != OrbitStatus::Attracted) {
    throw NotAttracted("sigma: point is not certified attracted");
  }

  C2Point orbit = z;   // f^m(z)
  C2Point prev = z;    // sigma_0 = z
  double gap = 0.0;
  for (int m = 1; m <= max_m; ++m) {
    orbit = apply_f(orbit);
    const C2Point cur = linear_part_inverse_power(m).apply(orbit);
    gap = weighted_norm(cur - prev);
    if (gap < tol) {
      // One more step gives the conjugacy defect exactly:
      // sigma_m(f(z)) = Df(0) sigma_{m+1}(z).
      const C2Point next =
          linear_part_inverse_power(m + 1).apply(apply_f(orbit));
      const double residual =
          weighted_norm(linear_part().apply(next - cur));
      return {cur, m, gap, residual};
    }
    prev = cur;
  }
  no_convergence("sigma", max_m, gap);
}

namespace {

struct PhiIteration {
  C2Point value;
  int order;
  double gap;
};

PhiIteration phi_converge(const C2Point& w, double tol, int max_m,
                          const char* who) {
  C2Point prev = w;  // phi_0 = identity
  double gap = 0.0;
  for (int m = 1; m <= max_m; ++m) {
    const C2Point cur = phi_fixed_order(w, m);
    gap = weighted_norm(cur - prev);
    if (gap < tol) return {cur, m, gap};
    prev = cur;
  }
  no_convergence(who, max_m, gap);
}

}  // namespace

ParamResult param_phi(const C2Point& w, double tol, int max_m) {
  require_params(tol, max_m, "param_phi");
  if (!is_finite(w)) throw std::invalid_argument("param_phi: non-finite input");

  const PhiIteration it = phi_converge(w, tol, max_m, "param_phi");
  // Functional-equation defect at matched truncation order:
  // || Phi_m(Df(0) w) - f(Phi_m(w)) ||.
  const C2Point lhs = phi_fixed_order(linear_part().apply(w), it.order);
  const double residual = weighted_norm(lhs - apply_f(it.value));
  return {it.value, it.order, it.gap, residual};
}

Mat2 jacobian_phi(const C2Point& w, double tol, int max_m) {
  require_params(tol, max_m, "jacobian_phi");
  if (!is_finite(w)) {
    throw std::invalid_argument("jacobian_phi: non-finite input");
  }

  const PhiIteration it = phi_converge(w, tol, max_m, "jacobian_phi");
  Mat2 jac = linear_part_power(it.order);
  C2Point x = apply_linear_part_power(it.order, w);
  for (int k = 0; k < it.order; ++k) {
    jac = jacobian_g(x) * jac;
    x = apply_g(x);
  }
  return jac;
}

}  // namespace fbtube
