#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbtube/exact_poly.hpp"
#include "fbtube/maps.hpp"
#include "fbtube/rng.hpp"

using namespace fbtube;

namespace {

double dist(const C2Point& a, const C2Point& b) {
  return std::max(std::abs(a.z1 - b.z1), std::abs(a.z2 - b.z2));
}

// Central-difference Jacobian of a holomorphic map, step h in each variable.
template <class F>
Mat2 fd_jacobian(F&& f, const C2Point& z, double h) {
  const Cx hc(h, 0.0);
  const C2Point d1 = Cx(1.0 / (2.0 * h)) *
                     (f(C2Point{z.z1 + hc, z.z2}) - f(C2Point{z.z1 - hc, z.z2}));
  const C2Point d2 = Cx(1.0 / (2.0 * h)) *
                     (f(C2Point{z.z1, z.z2 + hc}) - f(C2Point{z.z1, z.z2 - hc}));
  return {d1.z1, d2.z1, d1.z2, d2.z2};
}

}  // namespace

TEST_CASE("f examples") {
  CHECK(dist(apply_f(C2Point{Cx(0.0), Cx(0.0)}), C2Point{Cx(0.0), Cx(0.0)}) ==
        0.0);
  CHECK(dist(apply_f(C2Point{Cx(1.0), Cx(2.0)}), C2Point{Cx(2.0), Cx(1.5)}) ==
        0.0);
  // (i, 0) -> (0, -i/2)
  CHECK(dist(apply_f(C2Point{Cx(0.0, 1.0), Cx(0.0)}),
             C2Point{Cx(0.0), Cx(0.0, -0.5)}) == 0.0);
}

TEST_CASE("g examples") {
  CHECK(dist(apply_g(C2Point{Cx(0.0), Cx(0.0)}), C2Point{Cx(0.0), Cx(0.0)}) ==
        0.0);
  CHECK(dist(apply_g(C2Point{Cx(2.0), Cx(1.5)}), C2Point{Cx(1.0), Cx(2.0)}) ==
        0.0);
  CHECK(dist(apply_g(C2Point{Cx(3.0), Cx(1.0)}), C2Point{Cx(7.0), Cx(3.0)}) ==
        0.0);
}

TEST_CASE("g and f are mutually inverse on random points") {
  CounterRng rng{5, 1};
  for (int i = 0; i < 10000; ++i) {
    const C2Point z = rng.bidisk(static_cast<std::uint64_t>(i), 10.0, 10.0);
    CHECK(dist(apply_g(apply_f(z)), z) <= 1e-12);
    CHECK(dist(apply_f(apply_g(z)), z) <= 1e-12);
  }
}

TEST_CASE("jacobian of f") {
  const Mat2 at0 = jacobian_f(C2Point{Cx(0.0), Cx(0.0)});
  CHECK(max_entry_abs(at0 - linear_part()) == 0.0);

  const Mat2 at01 = jacobian_f(C2Point{Cx(0.0), Cx(1.0)});
  CHECK(at01.a == Cx(0.0));
  CHECK(at01.b == Cx(1.0));
  CHECK(at01.c == Cx(-0.5));
  CHECK(at01.d == Cx(1.0));

  // det Df == 1/2 exactly, everywhere.
  CHECK(jacobian_f(C2Point{Cx(5.0, 2.0), Cx(0.0, -3.0)}).det() == Cx(0.5));
  CounterRng rng{6, 1};
  for (int i = 0; i < 1000; ++i) {
    const C2Point z = rng.bidisk(static_cast<std::uint64_t>(i), 20.0, 20.0);
    CHECK(jacobian_f(z).det() == Cx(0.5));
    CHECK(jacobian_g(z).det() == Cx(2.0));
  }
}

TEST_CASE("analytic jacobians agree with finite differences") {
  CounterRng rng{8, 1};
  for (int i = 0; i < 50; ++i) {
    const C2Point z = rng.bidisk(static_cast<std::uint64_t>(i), 3.0, 3.0);
    const Mat2 fd_f = fd_jacobian([](const C2Point& p) { return apply_f(p); },
                                  z, 1e-6);
    CHECK(max_entry_abs(fd_f - jacobian_f(z)) <= 1e-6);
    const Mat2 fd_g = fd_jacobian([](const C2Point& p) { return apply_g(p); },
                                  z, 1e-6);
    CHECK(max_entry_abs(fd_g - jacobian_g(z)) <= 1e-6);
    const Mat2 fd_a =
        fd_jacobian([](const C2Point& p) { return apply_shear_A(p); }, z, 1e-6);
    CHECK(max_entry_abs(fd_a - jacobian_shear_A(z)) <= 1e-6);
  }
}

TEST_CASE("linear part squares to -1/2 I exactly") {
  const Mat2 sq = linear_part() * linear_part();
  CHECK(sq.a == Cx(-0.5));
  CHECK(sq.b == Cx(0.0));
  CHECK(sq.c == Cx(0.0));
  CHECK(sq.d == Cx(-0.5));

  const Mat2 inv_check = linear_part() * linear_part_inverse();
  CHECK(max_entry_abs(inv_check - Mat2::identity()) == 0.0);
}

TEST_CASE("characteristic polynomial and eigenvalue moduli") {
  using exact::Poly1;
  using exact::Rational;
  // char(lambda) = lambda^2 - tr lambda + det = lambda^2 + 1/2.
  const Mat2 m = linear_part();
  CHECK(m.a + m.d == Cx(0.0));
  CHECK(m.det() == Cx(0.5));
  const Poly1 x = Poly1::x();
  const Poly1 char_poly = x * x + Poly1::constant(Rational(1, 2));
  CHECK(char_poly.coeff(0) == Rational(1, 2));
  CHECK(char_poly.coeff(1) == Rational(0));
  CHECK(char_poly.coeff(2) == Rational(1));
  // |lambda|^2 = det = 1/2, so |lambda| = 2^{-1/2} < 1.
  CHECK(std::sqrt(0.5) < 1.0);
  CHECK(std::sqrt(0.5) == doctest::Approx(0.7071067811865476));
}

TEST_CASE("linear part powers: closed form vs repeated multiplication") {
  const C2Point w{Cx(1.0), Cx(1.0)};
  CHECK(dist(apply_linear_part_power(0, w), w) == 0.0);
  CHECK(dist(apply_linear_part_power(2, C2Point{Cx(1.0), Cx(0.0)}),
             C2Point{Cx(-0.5), Cx(0.0)}) == 0.0);

  CounterRng rng{9, 1};
  for (int m = 0; m <= 50; ++m) {
    const C2Point v = rng.bidisk(static_cast<std::uint64_t>(m), 2.0, 2.0);
    C2Point naive = v;
    for (int k = 0; k < m; ++k) naive = linear_part().apply(naive);
    CHECK(dist(apply_linear_part_power(m, v), naive) <= 1e-12);

    // inverse power undoes the power exactly up to rounding
    const C2Point roundtrip =
        linear_part_inverse_power(m).apply(apply_linear_part_power(m, v));
    CHECK(dist(roundtrip, v) <= 1e-12);
  }
  CHECK_THROWS_AS(linear_part_power(-1), std::invalid_argument);
}

TEST_CASE("L examples") {
  CHECK(dist(apply_L(C2Point{Cx(0.0), Cx(0.0)}), C2Point{Cx(0.0), Cx(0.0)}) ==
        0.0);
  CHECK(dist(apply_L(C2Point{Cx(25.0), Cx(25.0)}),
             C2Point{Cx(1.0), Cx(1.0)}) == 0.0);
  const C2Point img = apply_L(C2Point{Cx(10.0, 5.0), Cx(-50.0)});
  CHECK(img.z1 == Cx(-2.0));
  CHECK(img.z2.real() == doctest::Approx(0.4).epsilon(1e-16));
  CHECK(img.z2.imag() == doctest::Approx(0.2).epsilon(1e-16));
  CHECK(jacobian_L().det() == Cx(-1.0 / 625.0));
}

TEST_CASE("shear examples and inverse") {
  CHECK(dist(apply_shear_A(C2Point{Cx(0.0), Cx(0.0)}),
             C2Point{Cx(0.0), Cx(0.0)}) == 0.0);
  CHECK(dist(apply_shear_A(C2Point{Cx(1.0), Cx(2.0)}),
             C2Point{Cx(5.0), Cx(2.0)}) == 0.0);
  const C2Point p{Cx(0.0, 3.0), Cx(1.0, 1.0)};
  CHECK(dist(apply_shear_A_inverse(apply_shear_A(p)), p) == 0.0);
  CHECK(jacobian_shear_A(p).det() == Cx(1.0));
}

TEST_CASE("maps reject non-finite input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(apply_f(C2Point{Cx(nan), Cx(0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(apply_g(C2Point{Cx(0.0), Cx(nan)}), std::invalid_argument);
}
