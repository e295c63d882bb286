// Scalar reference backend. The AVX2 backend mirrors this op-for-op; any
// change here must be replicated there to keep outputs bitwise identical.

#include <cmath>

#include "fbtube/kernels/orbit_kernel.hpp"

namespace fbtube::kernels {

void classify_one(double z1r, double z1i, double z2r, double z2i,
                  const OrbitParams& p, std::uint8_t& status,
                  std::int32_t& iterations, double& final_norm) {
  const double thresh = 1.0 / 6.0;
  for (int m = 0;; ++m) {
    const double n1 = std::sqrt(z1r * z1r + z1i * z1i);
    const double n2 = std::sqrt(z2r * z2r + z2i * z2i);
    const double w1 = 0.75 * n1;
    const double wn = w1 > n2 ? w1 : n2;  // ties to n2, like _mm256_max_pd
    if (wn < thresh) {
      status = kStatusAttracted;
      iterations = m;
      final_norm = wn;
      return;
    }
    if (wn > p.escape_norm) {
      status = kStatusEscaped;
      iterations = m;
      final_norm = wn;
      return;
    }
    if (m == p.max_iter) {
      status = kStatusUnknown;
      iterations = m;
      final_norm = wn;
      return;
    }
    // (z1, z2) <- (z2, (z2^2 - z1) * 0.5)
    const double sq_r = z2r * z2r - z2i * z2i;
    const double t = z2r * z2i;
    const double sq_i = t + t;
    const double nz2r = (sq_r - z1r) * 0.5;
    const double nz2i = (sq_i - z1i) * 0.5;
    z1r = z2r;
    z1i = z2i;
    z2r = nz2r;
    z2i = nz2i;
  }
}

void classify_batch_scalar(const OrbitBatch& in, const OrbitParams& p,
                           const OrbitOut& out) {
  const std::size_t n = in.z1_re.size();
  for (std::size_t i = 0; i < n; ++i) {
    classify_one(in.z1_re[i], in.z1_im[i], in.z2_re[i], in.z2_im[i], p,
                 out.status[i], out.iterations[i], out.final_norm[i]);
  }
}

}  // namespace fbtube::kernels
