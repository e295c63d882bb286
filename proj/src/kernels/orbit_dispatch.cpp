#include <stdexcept>

#include "fbtube/kernels/orbit_kernel.hpp"

namespace fbtube::kernels {

bool avx2_available() {
#if defined(__AVX2__) || (defined(__x86_64__) && defined(__GNUC__))
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
#else
  return false;
#endif
}

Kind resolve_kind(Kind kind) {
  if (kind == Kind::Auto) return avx2_available() ? Kind::Avx2 : Kind::Scalar;
  return kind;
}

void classify_batch(const OrbitBatch& in, const OrbitParams& p,
                    const OrbitOut& out, Kind kind) {
  const std::size_t n = in.z1_re.size();
  if (in.z1_im.size() != n || in.z2_re.size() != n || in.z2_im.size() != n ||
      out.status.size() != n || out.iterations.size() != n ||
      out.final_norm.size() != n) {
    throw std::invalid_argument("classify_batch: span length mismatch");
  }
  if (p.max_iter < 0 || !(p.escape_norm > 1.0 / 6.0)) {
    throw std::invalid_argument("classify_batch: bad params");
  }
  switch (resolve_kind(kind)) {
    case Kind::Avx2:
      classify_batch_avx2(in, p, out);
      return;
    case Kind::Scalar:
    default:
      classify_batch_scalar(in, p, out);
      return;
  }
}

}  // namespace fbtube::kernels
