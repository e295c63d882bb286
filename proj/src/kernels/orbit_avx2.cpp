// AVX2 backend: four points per __m256d in SoA form. Op order matches the
// scalar reference exactly (mul/add/sub, vsqrtpd, vmaxpd; no fma), so results
// are bitwise identical. Resolved lanes keep iterating with their results
// frozen; once escaped they may overflow to inf/NaN, which affects nothing
// because their comparison outcomes are discarded.

#include "fbtube/kernels/orbit_kernel.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace fbtube::kernels {

namespace {

void classify_block4(const double* z1r_p, const double* z1i_p,
                     const double* z2r_p, const double* z2i_p,
                     const OrbitParams& p, std::uint8_t* status,
                     std::int32_t* iterations, double* final_norm,
                     std::size_t lanes) {
  const __m256d k_weight = _mm256_set1_pd(0.75);
  const __m256d k_half = _mm256_set1_pd(0.5);
  const __m256d k_thresh = _mm256_set1_pd(1.0 / 6.0);
  const __m256d k_escape = _mm256_set1_pd(p.escape_norm);

  __m256d z1r = _mm256_loadu_pd(z1r_p);
  __m256d z1i = _mm256_loadu_pd(z1i_p);
  __m256d z2r = _mm256_loadu_pd(z2r_p);
  __m256d z2i = _mm256_loadu_pd(z2i_p);

  int active = (1 << lanes) - 1;

  for (int m = 0;; ++m) {
    const __m256d n1 = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(z1r, z1r), _mm256_mul_pd(z1i, z1i)));
    const __m256d n2 = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_mul_pd(z2r, z2r), _mm256_mul_pd(z2i, z2i)));
    const __m256d wn = _mm256_max_pd(_mm256_mul_pd(k_weight, n1), n2);

    const int att = _mm256_movemask_pd(_mm256_cmp_pd(wn, k_thresh, _CMP_LT_OQ));
    const int esc = _mm256_movemask_pd(_mm256_cmp_pd(wn, k_escape, _CMP_GT_OQ));
    const bool last = (m == p.max_iter);
    const int resolved = active & (last ? 0xf : (att | esc));

    if (resolved) {
      alignas(32) double wn_a[4];
      _mm256_store_pd(wn_a, wn);
      for (int lane = 0; lane < 4; ++lane) {
        if (!(resolved & (1 << lane))) continue;
        std::uint8_t st = kStatusUnknown;
        if (att & (1 << lane)) {
          st = kStatusAttracted;
        } else if (esc & (1 << lane)) {
          st = kStatusEscaped;
        }
        status[lane] = st;
        iterations[lane] = m;
        final_norm[lane] = wn_a[lane];
      }
      active &= ~resolved;
      if (active == 0) return;
    }
    if (last) return;

    const __m256d sq_r =
        _mm256_sub_pd(_mm256_mul_pd(z2r, z2r), _mm256_mul_pd(z2i, z2i));
    const __m256d t = _mm256_mul_pd(z2r, z2i);
    const __m256d sq_i = _mm256_add_pd(t, t);
    const __m256d nz2r = _mm256_mul_pd(_mm256_sub_pd(sq_r, z1r), k_half);
    const __m256d nz2i = _mm256_mul_pd(_mm256_sub_pd(sq_i, z1i), k_half);
    z1r = z2r;
    z1i = z2i;
    z2r = nz2r;
    z2i = nz2i;
  }
}

}  // namespace

void classify_batch_avx2(const OrbitBatch& in, const OrbitParams& p,
                         const OrbitOut& out) {
  const std::size_t n = in.z1_re.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    classify_block4(&in.z1_re[i], &in.z1_im[i], &in.z2_re[i], &in.z2_im[i], p,
                    &out.status[i], &out.iterations[i], &out.final_norm[i], 4);
  }
  if (i < n) {
    const std::size_t rem = n - i;
    alignas(32) double z1r[4], z1i[4], z2r[4], z2i[4];
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t src = i + (k < rem ? k : 0);
      z1r[k] = in.z1_re[src];
      z1i[k] = in.z1_im[src];
      z2r[k] = in.z2_re[src];
      z2i[k] = in.z2_im[src];
    }
    std::uint8_t st[4];
    std::int32_t it[4];
    double fn[4];
    classify_block4(z1r, z1i, z2r, z2i, p, st, it, fn, 4);
    for (std::size_t k = 0; k < rem; ++k) {
      out.status[i + k] = st[k];
      out.iterations[i + k] = it[k];
      out.final_norm[i + k] = fn[k];
    }
  }
}

}  // namespace fbtube::kernels

#else  // !__AVX2__

#include <stdexcept>

namespace fbtube::kernels {

void classify_batch_avx2(const OrbitBatch&, const OrbitParams&,
                         const OrbitOut&) {
  throw std::runtime_error("AVX2 backend not compiled in");
}

}  // namespace fbtube::kernels

#endif
