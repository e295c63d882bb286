#pragma once
// Batch orbit-classification kernels.
//
// The hot loop of the basin renderer iterates f(z1, z2) = (z2, (z2^2 - z1)/2)
// per pixel until the weighted norm drops below 1/6 (attracted), exceeds the
// escape bound (escaped), or the cap is hit (unknown). Two backends exist: a
// scalar reference and an AVX2 variant (4 points per vector, SoA layout),
// selected at runtime. Both evaluate the same IEEE expression graph in the
// same order -- plain mul/add/sub, sqrt, max with ties to the second operand,
// no fma -- so their outputs are bitwise identical; see the equivalence tests.

#include <cstdint>
#include <span>

namespace fbtube::kernels {

enum class Kind : std::uint8_t { Auto = 0, Scalar = 1, Avx2 = 2 };

struct OrbitParams {
  int max_iter = 200;        // membership checked at iterates 0..max_iter
  double escape_norm = 1e6;  // weighted-norm escape bound, > 1/6
};

// Status codes shared with basin::OrbitStatus.
inline constexpr std::uint8_t kStatusEscaped = 0;
inline constexpr std::uint8_t kStatusUnknown = 1;
inline constexpr std::uint8_t kStatusAttracted = 2;

/// Input points in structure-of-arrays form; all spans have equal length.
struct OrbitBatch {
  std::span<const double> z1_re, z1_im, z2_re, z2_im;
};

/// Per-point outputs; spans sized like the batch.
struct OrbitOut {
  std::span<std::uint8_t> status;
  std::span<std::int32_t> iterations;  // index of the deciding iterate
  std::span<double> final_norm;        // weighted norm at that iterate
};

/// True when the AVX2 backend can run on this CPU.
bool avx2_available();

/// Resolves Auto to the preferred available backend.
Kind resolve_kind(Kind kind);

/// Classifies a batch with the requested backend (Auto = best available).
/// Throws std::invalid_argument on span-length mismatch or bad params.
void classify_batch(const OrbitBatch& in, const OrbitParams& p,
                    const OrbitOut& out, Kind kind = Kind::Auto);

// Individual backends, exposed for equivalence testing.
void classify_batch_scalar(const OrbitBatch& in, const OrbitParams& p,
                           const OrbitOut& out);
void classify_batch_avx2(const OrbitBatch& in, const OrbitParams& p,
                         const OrbitOut& out);

/// Scalar single-point classification; the reference semantics.
void classify_one(double z1r, double z1i, double z2r, double z2i,
                  const OrbitParams& p, std::uint8_t& status,
                  std::int32_t& iterations, double& final_norm);

}  // namespace fbtube::kernels
