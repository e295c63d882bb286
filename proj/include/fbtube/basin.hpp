#pragma once
// Region predicates (local basin B, containing sets D1 and D2, tube T,
// coefficient region S), the orbit-based basin classifier, and slice
// rasterization with CSV/PGM emission.
//
// Classification semantics: Attracted is a sound certificate of basin
// membership (the orbit entered B, which is forward invariant with
// contraction factor 3/4). Escaped and Unknown are heuristic only -- orbit
// iteration cannot certify non-membership -- and every output format labels
// them as such.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fbtube/complex2.hpp"
#include "fbtube/kernels/orbit_kernel.hpp"

namespace fbtube {

inline constexpr double kBasinNormBound = 1.0 / 6.0;
inline constexpr int kDefaultMaxIter = 200;
inline constexpr double kDefaultEscapeNorm = 1e6;

/// B: weighted norm < 1/6 (strict).
bool in_local_basin(const C2Point& z);

/// D1: |z1| < 25 and |z2| < 5 (both strict).
bool in_D1(const C2Point& z);

/// D2: |z1| >= 10 + |z2| (non-strict).
bool in_D2(const C2Point& z);

/// T: |x| < 1 + |y| (strict).
bool in_tube_T(const C2Point& p);

/// S: |u - v^2| < 1 + |v| (strict).
bool in_S(const C2Point& q);

enum class OrbitStatus : std::uint8_t {
  Escaped = kernels::kStatusEscaped,
  Unknown = kernels::kStatusUnknown,
  Attracted = kernels::kStatusAttracted,
};

const char* to_string(OrbitStatus s);

struct OrbitVerdict {
  OrbitStatus status = OrbitStatus::Unknown;
  int iterations = 0;
  double final_norm = 0.0;
};

/// Iterates f and reports Attracted(m) at the first iterate in B, Escaped(m)
/// at the first iterate with weighted norm > escape_norm, else
/// Unknown(max_iter). Rejects non-finite z, max_iter < 1, escape_norm <= 1/6.
OrbitVerdict classify_point(const C2Point& z, int max_iter = kDefaultMaxIter,
                            double escape_norm = kDefaultEscapeNorm);

/// Affine 2-parameter slice of C^2: point(ix, iy) = anchor + s*dir1 + t*dir2
/// with s, t at pixel centers of [s_min, s_max] x [t_min, t_max].
struct SliceSpec {
  C2Point anchor{};
  C2Point dir1{Cx(1.0), Cx(0.0)};
  C2Point dir2{Cx(0.0), Cx(1.0)};
  int nx = 1;
  int ny = 1;
  double s_min = -1.0, s_max = 1.0;
  double t_min = -1.0, t_max = 1.0;
};

/// Slice coordinates of pixel centers.
double slice_coord(double lo, double hi, int n, int i);
C2Point slice_point(const SliceSpec& spec, int ix, int iy);

struct SliceResult {
  SliceSpec spec;
  int max_iter = 0;
  double escape_norm = 0.0;
  std::vector<OrbitVerdict> cells;  // row-major, index = iy * nx + ix
  long attracted = 0;
  long escaped = 0;
  long unknown = 0;
  // Attracted pixels outside D1 u D2; the containment theorem says this
  // stays zero, and the renderer cross-checks it on every run.
  long thin_violations = 0;

  const OrbitVerdict& at(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * spec.nx + ix];
  }
};

/// Classifies every pixel of the slice. Pure per pixel; distributes rows
/// over `threads` workers (0 = hardware concurrency) with output ordering
/// fixed by pixel index, so the result is independent of the worker count.
SliceResult render_slice(const SliceSpec& spec, int max_iter = kDefaultMaxIter,
                         double escape_norm = kDefaultEscapeNorm,
                         int threads = 0,
                         kernels::Kind kernel = kernels::Kind::Auto);

/// CSV rows (x_index, y_index, status, iterations) with '#' header comments
/// echoing the config and marking Escaped/Unknown as heuristic.
void write_slice_csv(std::ostream& os, const SliceResult& r,
                     const std::vector<std::string>& config_echo = {});

/// Plain (P2) PGM, status encoded 0/128/255 for Escaped/Unknown/Attracted.
void write_slice_pgm(std::ostream& os, const SliceResult& r,
                     const std::vector<std::string>& config_echo = {});

}  // namespace fbtube
