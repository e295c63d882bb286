#include "fbtube/complex2.hpp"

namespace fbtube {

namespace {

void require_finite(const C2Point& z, const char* who) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(who) + ": non-finite input");
  }
}

}  // namespace

double weighted_norm(const C2Point& z) {
  require_finite(z, "weighted_norm");
  return weighted_norm_raw(z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag());
}

double chordal_distance(const ExtComplex& p, const ExtComplex& q) {
  if (!p.infinite && !is_finite(p.value)) {
    throw std::invalid_argument("chordal_distance: non-finite input");
  }
  if (!q.infinite && !is_finite(q.value)) {
    throw std::invalid_argument("chordal_distance: non-finite input");
  }
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite || q.infinite) {
    const Cx z = p.infinite ? q.value : p.value;
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  const double num = 2.0 * std::abs(p.value - q.value);
  const double den =
      std::sqrt(1.0 + std::norm(p.value)) * std::sqrt(1.0 + std::norm(q.value));
  return num / den;
}

double spherical_derivative_affine(Cx u, Cx v, Cx z) {
  const Cx w = u + v * z;
  return std::abs(v) / (1.0 + std::norm(w));
}

}  // namespace fbtube
