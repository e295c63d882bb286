#pragma once
// Outward-rounded interval arithmetic over double endpoints.
//
// Directed rounding is emulated with error-free transformations instead of
// fesetround: each primitive computes the rounded result together with the
// exact sign of its rounding error (two-sum for +/-, fma-based residuals for
// *, / and sqrt) and bumps the affected endpoint by one ulp only when the
// operation was inexact. Exact results therefore stay exact, which is what
// lets certificates whose infimum is attained (r (1 - 6r) >= 0 at r = 0)
// close without an epsilon fudge. Where the residual may underflow, the code
// falls back to an unconditional one-ulp widening, which is always sound for
// a correctly rounded result.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fbtube {

namespace detail {

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Saturate an overflowed endpoint: the exact value lies beyond the largest
// finite double, so DBL_MAX (resp. -DBL_MAX) bounds it from the inside.
inline double saturate_lo(double s) {
  return s == -std::numeric_limits<double>::infinity()
             ? -std::numeric_limits<double>::infinity()
             : s;
}

struct Directed {
  double down;
  double up;
};

// Magnitudes below this may have unrepresentable fma residuals; widen
// unconditionally there.
inline constexpr double kResidualSafeMin = 1e-290;

inline Directed from_error_sign(double rounded, double err) {
  Directed d{rounded, rounded};
  if (err < 0.0) d.down = next_down(rounded);
  if (err > 0.0) d.up = next_up(rounded);
  return d;
}

inline Directed widen_both(double rounded) {
  return {next_down(rounded), next_up(rounded)};
}

inline Directed add_directed(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return {s > 0 ? std::numeric_limits<double>::max() : s,
            s > 0 ? s : -std::numeric_limits<double>::max()};
  }
  // Knuth two-sum: err is the exact value of (a + b) - s.
  const double bp = s - a;
  const double err = (a - (s - bp)) + (b - bp);
  return from_error_sign(s, err);
}

inline Directed mul_directed(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) {
    return {p > 0 ? std::numeric_limits<double>::max() : p,
            p > 0 ? p : -std::numeric_limits<double>::max()};
  }
  if (a == 0.0 || b == 0.0) return {p, p};  // product is an exact zero
  if (std::fabs(p) < kResidualSafeMin) return widen_both(p);
  const double err = std::fma(a, b, -p);  // exact: a*b - p
  return from_error_sign(p, err);
}

inline Directed div_directed(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) {
    return {q > 0 ? std::numeric_limits<double>::max() : q,
            q > 0 ? q : -std::numeric_limits<double>::max()};
  }
  if (a == 0.0) return {q, q};
  if (std::fabs(q) < kResidualSafeMin || std::fabs(a) < kResidualSafeMin) {
    return widen_both(q);
  }
  // r = q*b - a exactly; a/b - q = -r/b, so the error sign is -sign(r)sign(b).
  const double r = std::fma(q, b, -a);
  const double err = (b > 0.0) ? -r : r;
  return from_error_sign(q, err);
}

inline Directed sqrt_directed(double a) {
  const double s = std::sqrt(a);
  if (a == 0.0) return {0.0, 0.0};
  if (s < kResidualSafeMin) return widen_both(s);
  const double r = std::fma(s, s, -a);  // s^2 - a exactly
  // r > 0 means s > sqrt(a); r < 0 means s < sqrt(a).
  return from_error_sign(s, -r);
}

}  // namespace detail

/// Closed real interval [lo, hi]. Arithmetic encloses the exact real result
/// of the operation applied to any members of the operands.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;

  RealInterval() = default;
  RealInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi) || std::isnan(lo) || std::isnan(hi)) {
      throw std::invalid_argument("RealInterval: requires lo <= hi, no NaN");
    }
  }

  /// Degenerate interval [x, x].
  static RealInterval point(double x) { return RealInterval(x, x); }

  /// Outward enclosure of the rational p/q, q != 0.
  static RealInterval ratio(long long p, long long q);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
};

RealInterval operator+(RealInterval x, RealInterval y);
RealInterval operator-(RealInterval x, RealInterval y);
RealInterval operator-(RealInterval x);
RealInterval operator*(RealInterval x, RealInterval y);

/// Division; y must not contain zero.
RealInterval operator/(RealInterval x, RealInterval y);

/// Square, tighter than x*x (no dependency blowup across zero).
RealInterval sq(RealInterval x);

/// Enclosure of sqrt; requires x.lo >= 0.
RealInterval sqrt_enclosure(RealInterval x);

/// Enclosure of |x|.
RealInterval abs_bounds(RealInterval x);

inline RealInterval operator+(double x, RealInterval y) {
  return RealInterval::point(x) + y;
}
inline RealInterval operator-(double x, RealInterval y) {
  return RealInterval::point(x) - y;
}
inline RealInterval operator*(double x, RealInterval y) {
  return RealInterval::point(x) * y;
}
inline RealInterval operator+(RealInterval x, double y) {
  return x + RealInterval::point(y);
}
inline RealInterval operator-(RealInterval x, double y) {
  return x - RealInterval::point(y);
}
inline RealInterval operator*(RealInterval x, double y) {
  return x * RealInterval::point(y);
}

/// Axis-aligned box in R^n.
using Box = std::vector<RealInterval>;

}  // namespace fbtube
