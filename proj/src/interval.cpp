#include "fbtube/interval.hpp"

#include <algorithm>

namespace fbtube {

using detail::add_directed;
using detail::div_directed;
using detail::mul_directed;
using detail::sqrt_directed;

RealInterval RealInterval::ratio(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("RealInterval::ratio: q == 0");
  const auto d = div_directed(static_cast<double>(p), static_cast<double>(q));
  return RealInterval(d.down, d.up);
}

RealInterval operator+(RealInterval x, RealInterval y) {
  return RealInterval(add_directed(x.lo, y.lo).down, add_directed(x.hi, y.hi).up);
}

RealInterval operator-(RealInterval x) { return RealInterval(-x.hi, -x.lo); }

RealInterval operator-(RealInterval x, RealInterval y) {
  return RealInterval(add_directed(x.lo, -y.hi).down, add_directed(x.hi, -y.lo).up);
}

RealInterval operator*(RealInterval x, RealInterval y) {
  // Endpoint candidates with both rounding directions; min/max is sound and
  // keeps exact zeros exact.
  const double xs[2] = {x.lo, x.hi};
  const double ys[2] = {y.lo, y.hi};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double a : xs) {
    for (double b : ys) {
      const auto d = mul_directed(a, b);
      lo = std::min(lo, d.down);
      hi = std::max(hi, d.up);
    }
  }
  return RealInterval(lo, hi);
}

RealInterval operator/(RealInterval x, RealInterval y) {
  if (y.lo <= 0.0 && y.hi >= 0.0) {
    throw std::invalid_argument("RealInterval division by interval containing 0");
  }
  const double xs[2] = {x.lo, x.hi};
  const double ys[2] = {y.lo, y.hi};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double a : xs) {
    for (double b : ys) {
      const auto d = div_directed(a, b);
      lo = std::min(lo, d.down);
      hi = std::max(hi, d.up);
    }
  }
  return RealInterval(lo, hi);
}

RealInterval sq(RealInterval x) {
  const double m = std::max(std::fabs(x.lo), std::fabs(x.hi));
  const double up = mul_directed(m, m).up;
  if (x.lo >= 0.0) {
    return RealInterval(mul_directed(x.lo, x.lo).down, up);
  }
  if (x.hi <= 0.0) {
    return RealInterval(mul_directed(x.hi, x.hi).down, up);
  }
  return RealInterval(0.0, up);
}

RealInterval sqrt_enclosure(RealInterval x) {
  if (x.lo < 0.0) {
    throw std::invalid_argument("sqrt_enclosure: negative lower endpoint");
  }
  return RealInterval(sqrt_directed(x.lo).down, sqrt_directed(x.hi).up);
}

RealInterval abs_bounds(RealInterval x) {
  if (x.lo >= 0.0) return x;
  if (x.hi <= 0.0) return RealInterval(-x.hi, -x.lo);
  return RealInterval(0.0, std::max(-x.lo, x.hi));
}

}  // namespace fbtube
