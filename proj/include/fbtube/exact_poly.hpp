#pragma once
// Small exact rational arithmetic and polynomial algebra, used to verify the
// algebraic identities behind the certificates by coefficient comparison
// (factorizations, shear cancellation, the linear part squaring to -1/2 I).
// Magnitudes are tiny; overflow is guarded through 128-bit intermediates.

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbtube::exact {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
  }
};

namespace detail {
inline long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("Rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}
inline Rational make(__int128 n, __int128 d) {
  // Reduce in 128 bits before narrowing.
  __int128 a = n < 0 ? -n : n;
  __int128 b = d < 0 ? -d : d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(narrow(n), narrow(d));
}
}  // namespace detail

inline Rational operator+(Rational x, Rational y) {
  return detail::make(static_cast<__int128>(x.num) * y.den +
                          static_cast<__int128>(y.num) * x.den,
                      static_cast<__int128>(x.den) * y.den);
}
inline Rational operator-(Rational x, Rational y) {
  return detail::make(static_cast<__int128>(x.num) * y.den -
                          static_cast<__int128>(y.num) * x.den,
                      static_cast<__int128>(x.den) * y.den);
}
inline Rational operator*(Rational x, Rational y) {
  return detail::make(static_cast<__int128>(x.num) * y.num,
                      static_cast<__int128>(x.den) * y.den);
}
inline Rational operator/(Rational x, Rational y) {
  if (y.num == 0) throw std::invalid_argument("Rational division by zero");
  return detail::make(static_cast<__int128>(x.num) * y.den,
                      static_cast<__int128>(x.den) * y.num);
}
inline Rational operator-(Rational x) { return Rational(-x.num, x.den); }
inline bool operator==(Rational x, Rational y) {
  return x.num == y.num && x.den == y.den;
}
inline bool operator!=(Rational x, Rational y) { return !(x == y); }
inline bool operator<(Rational x, Rational y) {
  return static_cast<__int128>(x.num) * y.den <
         static_cast<__int128>(y.num) * x.den;
}

/// Dense univariate polynomial with rational coefficients, coeffs[k] ~ X^k.
struct Poly1 {
  std::vector<Rational> coeffs;

  Poly1() = default;
  explicit Poly1(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

  static Poly1 constant(Rational c) { return Poly1({c}); }
  static Poly1 x() { return Poly1({Rational(0), Rational(1)}); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(std::size_t k) const {
    return k < coeffs.size() ? coeffs[k] : Rational(0);
  }
  Rational eval(Rational v) const {
    Rational acc(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * v + coeffs[k];
    return acc;
  }
};

inline Poly1 operator+(const Poly1& p, const Poly1& q) {
  std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
  return Poly1(std::move(c));
}
inline Poly1 operator-(const Poly1& p, const Poly1& q) {
  std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) - q.coeff(k);
  return Poly1(std::move(c));
}
inline Poly1 operator*(const Poly1& p, const Poly1& q) {
  if (p.is_zero() || q.is_zero()) return Poly1();
  std::vector<Rational> c(p.coeffs.size() + q.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
      c[i + j] = c[i + j] + p.coeffs[i] * q.coeffs[j];
    }
  }
  return Poly1(std::move(c));
}
inline Poly1 operator*(Rational s, const Poly1& p) {
  std::vector<Rational> c = p.coeffs;
  for (auto& v : c) v = s * v;
  return Poly1(std::move(c));
}
inline bool operator==(const Poly1& p, const Poly1& q) {
  return (p - q).is_zero();
}

/// Sparse bivariate polynomial, keys (i, j) ~ X^i Y^j.
struct Poly2 {
  std::map<std::pair<int, int>, Rational> terms;

  static Poly2 x() {
    Poly2 p;
    p.terms[{1, 0}] = Rational(1);
    return p;
  }
  static Poly2 y() {
    Poly2 p;
    p.terms[{0, 1}] = Rational(1);
    return p;
  }
  static Poly2 constant(Rational c) {
    Poly2 p;
    if (!c.is_zero()) p.terms[{0, 0}] = c;
    return p;
  }

  void trim() {
    for (auto it = terms.begin(); it != terms.end();) {
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
};

inline Poly2 operator+(const Poly2& p, const Poly2& q) {
  Poly2 r = p;
  for (const auto& [k, v] : q.terms) {
    auto it = r.terms.find(k);
    if (it == r.terms.end()) {
      r.terms[k] = v;
    } else {
      it->second = it->second + v;
    }
  }
  r.trim();
  return r;
}
inline Poly2 operator-(const Poly2& p, const Poly2& q) {
  Poly2 neg;
  for (const auto& [k, v] : q.terms) neg.terms[k] = -v;
  return p + neg;
}
inline Poly2 operator*(const Poly2& p, const Poly2& q) {
  Poly2 r;
  for (const auto& [kp, vp] : p.terms) {
    for (const auto& [kq, vq] : q.terms) {
      const std::pair<int, int> k{kp.first + kq.first, kp.second + kq.second};
      auto it = r.terms.find(k);
      if (it == r.terms.end()) {
        r.terms[k] = vp * vq;
      } else {
        it->second = it->second + vp * vq;
      }
    }
  }
  r.trim();
  return r;
}
inline bool operator==(const Poly2& p, const Poly2& q) {
  return (p - q).is_zero();
}

}  // namespace fbtube::exact
