#include "fbtube/basin.hpp"

#include <ostream>
#include <stdexcept>

#include "fbtube/parallel.hpp"

namespace fbtube {

namespace {

void require_finite(const C2Point& z, const char* who) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(who) + ": non-finite input");
  }
}

}  // namespace

bool in_local_basin(const C2Point& z) {
  return weighted_norm(z) < kBasinNormBound;
}

bool in_D1(const C2Point& z) {
  require_finite(z, "in_D1");
  return modulus_plain(z.z1) < 25.0 && modulus_plain(z.z2) < 5.0;
}

bool in_D2(const C2Point& z) {
  require_finite(z, "in_D2");
  return modulus_plain(z.z1) >= 10.0 + modulus_plain(z.z2);
}

bool in_tube_T(const C2Point& p) {
  require_finite(p, "in_tube_T");
  return modulus_plain(p.z1) < 1.0 + modulus_plain(p.z2);
}

bool in_S(const C2Point& q) {
  require_finite(q, "in_S");
  return modulus_plain(q.z1 - q.z2 * q.z2) < 1.0 + modulus_plain(q.z2);
}

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Attracted:
      return "attracted";
    case OrbitStatus::Escaped:
      return "escaped";
    default:
      return "unknown";
  }
}

OrbitVerdict classify_point(const C2Point& z, int max_iter,
                            double escape_norm) {
  require_finite(z, "classify_point");
  if (max_iter < 1) {
    throw std::invalid_argument("classify_point: max_iter must be >= 1");
  }
  if (!(escape_norm > kBasinNormBound) || !std::isfinite(escape_norm)) {
    throw std::invalid_argument("classify_point: escape_norm must be > 1/6");
  }
  kernels::OrbitParams p{max_iter, escape_norm};
  std::uint8_t st = 0;
  std::int32_t it = 0;
  double fn = 0.0;
  kernels::classify_one(z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag(), p,
                        st, it, fn);
  return {static_cast<OrbitStatus>(st), static_cast<int>(it), fn};
}

double slice_coord(double lo, double hi, int n, int i) {
  return lo + (static_cast<double>(i) + 0.5) * ((hi - lo) / n);
}

C2Point slice_point(const SliceSpec& spec, int ix, int iy) {
  const double s = slice_coord(spec.s_min, spec.s_max, spec.nx, ix);
  const double t = slice_coord(spec.t_min, spec.t_max, spec.ny, iy);
  return spec.anchor + Cx(s) * spec.dir1 + Cx(t) * spec.dir2;
}

SliceResult render_slice(const SliceSpec& spec, int max_iter,
                         double escape_norm, int threads,
                         kernels::Kind kernel) {
  if (spec.nx < 1 || spec.ny < 1) {
    throw std::invalid_argument("render_slice: grid must be at least 1x1");
  }
  require_finite(spec.anchor, "render_slice");
  require_finite(spec.dir1, "render_slice");
  require_finite(spec.dir2, "render_slice");
  if (weighted_norm(spec.dir1) == 0.0 || weighted_norm(spec.dir2) == 0.0) {
    throw std::invalid_argument("render_slice: directions must be nonzero");
  }
  if (!(spec.s_min <= spec.s_max) || !(spec.t_min <= spec.t_max)) {
    throw std::invalid_argument("render_slice: bad ranges");
  }
  if (max_iter < 1 || !(escape_norm > kBasinNormBound)) {
    throw std::invalid_argument("render_slice: bad iteration params");
  }

  const std::int64_t n =
      static_cast<std::int64_t>(spec.nx) * static_cast<std::int64_t>(spec.ny);
  std::vector<double> z1r(n), z1i(n), z2r(n), z2i(n);
  for (int iy = 0; iy < spec.ny; ++iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      const C2Point pt = slice_point(spec, ix, iy);
      const std::int64_t k =
          static_cast<std::int64_t>(iy) * spec.nx + ix;
      z1r[k] = pt.z1.real();
      z1i[k] = pt.z1.imag();
      z2r[k] = pt.z2.real();
      z2i[k] = pt.z2.imag();
    }
  }

  std::vector<std::uint8_t> status(n);
  std::vector<std::int32_t> iters(n);
  std::vector<double> norms(n);
  const kernels::OrbitParams params{max_iter, escape_norm};
  const kernels::Kind kind = kernels::resolve_kind(kernel);

  parallel_for(n, threads, [&](std::int64_t begin, std::int64_t end) {
    const std::size_t b = static_cast<std::size_t>(begin);
    const std::size_t len = static_cast<std::size_t>(end - begin);
    kernels::OrbitBatch in{
        std::span<const double>(&z1r[b], len),
        std::span<const double>(&z1i[b], len),
        std::span<const double>(&z2r[b], len),
        std::span<const double>(&z2i[b], len),
    };
    kernels::OrbitOut out{
        std::span<std::uint8_t>(&status[b], len),
        std::span<std::int32_t>(&iters[b], len),
        std::span<double>(&norms[b], len),
    };
    kernels::classify_batch(in, params, out, kind);
  });

  SliceResult r;
  r.spec = spec;
  r.max_iter = max_iter;
  r.escape_norm = escape_norm;
  r.cells.resize(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const auto s = static_cast<OrbitStatus>(status[k]);
    r.cells[k] = {s, static_cast<int>(iters[k]), norms[k]};
    switch (s) {
      case OrbitStatus::Attracted: {
        ++r.attracted;
        const C2Point pt{Cx(z1r[k], z1i[k]), Cx(z2r[k], z2i[k])};
        if (!in_D1(pt) && !in_D2(pt)) ++r.thin_violations;
        break;
      }
      case OrbitStatus::Escaped:
        ++r.escaped;
        break;
      default:
        ++r.unknown;
        break;
    }
  }
  return r;
}

namespace {

const char* kLegend =
    "legend: attracted=certified basin member; "
    "escaped,unknown=heuristic (non-membership is not certified)";

}  // namespace

void write_slice_csv(std::ostream& os, const SliceResult& r,
                     const std::vector<std::string>& config_echo) {
  os << "# basin slice " << r.spec.nx << "x" << r.spec.ny << "\n";
  os << "# " << kLegend << "\n";
  for (const auto& line : config_echo) os << "# " << line << "\n";
  os << "x_index,y_index,status,iterations\n";
  for (int iy = 0; iy < r.spec.ny; ++iy) {
    for (int ix = 0; ix < r.spec.nx; ++ix) {
      const auto& v = r.at(ix, iy);
      os << ix << ',' << iy << ',' << to_string(v.status) << ','
         << v.iterations << "\n";
    }
  }
}

void write_slice_pgm(std::ostream& os, const SliceResult& r,
                     const std::vector<std::string>& config_echo) {
  os << "P2\n";
  os << "# " << kLegend << " (escaped=0 unknown=128 attracted=255)\n";
  for (const auto& line : config_echo) os << "# " << line << "\n";
  os << r.spec.nx << " " << r.spec.ny << "\n255\n";
  for (int iy = 0; iy < r.spec.ny; ++iy) {
    for (int ix = 0; ix < r.spec.nx; ++ix) {
      int v = 128;
      switch (r.at(ix, iy).status) {
        case OrbitStatus::Attracted:
          v = 255;
          break;
        case OrbitStatus::Escaped:
          v = 0;
          break;
        default:
          v = 128;
          break;
      }
      os << v << (ix + 1 == r.spec.nx ? "\n" : " ");
    }
  }
}

}  // namespace fbtube
