#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fbtube/basin.hpp"
#include "fbtube/family.hpp"
#include "fbtube/maps.hpp"
#include "fbtube/rng.hpp"

using namespace fbtube;

namespace {

constexpr double kExpectedObstruction = 1.0 / 625.0;

}  // namespace

TEST_CASE("uv at the origin") {
  const CoeffPair c = uv(Cx(0.0), Cx(0.0));
  CHECK(std::abs(c.u) == 0.0);
  CHECK(std::abs(c.v) == 0.0);
  CHECK(in_S(C2Point{c.u, c.v}));
}

TEST_CASE("uv lands in S, through the tube") {
  CounterRng rng{81, 1};
  for (int i = 0; i < 1000; ++i) {
    const C2Point ab = rng.bidisk(static_cast<std::uint64_t>(i), 2.0, 2.0);
    const ParamResult phi = param_phi(ab);
    const C2Point xy = apply_L(phi.value);
    CHECK(in_tube_T(xy));
    const C2Point uv_pt = apply_shear_A(xy);
    CHECK(in_S(uv_pt));
    // the margin 1 + |v| - |u - v^2| stays positive
    CHECK(1.0 + std::abs(uv_pt.z2) -
              std::abs(uv_pt.z1 - uv_pt.z2 * uv_pt.z2) >
          0.0);
  }
}

TEST_CASE("eval_F examples") {
  const Cx a(0.3, 0.1), b(-0.2, 0.4);
  const CoeffPair c = uv(a, b);
  CHECK(std::abs(eval_F(Cx(0.0), a, b) - c.u) <= 1e-12);
  const Cx slope = eval_F(Cx(1.0), a, b) - eval_F(Cx(0.0), a, b);
  CHECK(std::abs(slope - c.v) <= 1e-12);
  CHECK(std::abs(eval_F(Cx(2.0), Cx(0.0), Cx(0.0))) <= 1e-12);
}

TEST_CASE("the obstruction is the constant 1/625") {
  const Cx at0 = wronskian(Cx(0.0), Cx(0.0));
  CHECK(std::abs(at0 - Cx(kExpectedObstruction)) <= 1e-12);

  CounterRng rng{82, 1};
  for (int i = 0; i < 1000; ++i) {
    const C2Point ab = rng.bidisk(static_cast<std::uint64_t>(i), 2.0, 2.0);
    const Cx w = wronskian(ab.z1, ab.z2);
    CHECK(std::abs(w) > 1e-4);  // nonvanishing
    CHECK(std::abs(w - Cx(kExpectedObstruction)) <=
          1e-6 * kExpectedObstruction);
  }
}

TEST_CASE("chain-rule obstruction matches finite differences") {
  CounterRng rng{83, 1};
  for (int i = 0; i < 10; ++i) {
    const C2Point ab = rng.bidisk(static_cast<std::uint64_t>(i), 2.0, 2.0);
    const Cx chain = wronskian(ab.z1, ab.z2);
    const Cx fd = wronskian_fd(ab.z1, ab.z2);
    CHECK(std::abs(chain - fd) <= 1e-4);
  }
}

TEST_CASE("negative control: factorable family has zero obstruction") {
  CounterRng rng{84, 1};
  for (int i = 0; i < 100; ++i) {
    const C2Point ab = rng.bidisk(static_cast<std::uint64_t>(i), 2.0, 2.0);
    const Cx w = family_wronskian_fd(control_family, ab.z1, ab.z2);
    CHECK(std::abs(w) < 1e-12);
  }
}

TEST_CASE("case2 lower bound examples") {
  // constant map: lhs = 0.5, rhs = -1
  const Case2Check constant = case2_lower_bound_check(Cx(0.5), Cx(0.0), 1.0);
  CHECK(constant.lhs == 0.5);
  CHECK(constant.rhs == -1.0);
  CHECK(constant.holds);

  // u = v^2, v = 10, R = 1: lhs = 90, rhs = 100 - 20 - 1 = 79
  const Case2Check big = case2_lower_bound_check(Cx(100.0), Cx(10.0), 1.0);
  CHECK(big.lhs == 90.0);
  CHECK(big.rhs == 79.0);
  CHECK(big.holds);

  CHECK_THROWS_AS(case2_lower_bound_check(Cx(5.0), Cx(0.0), 1.0),
                  std::invalid_argument);  // (5, 0) not in S
  CHECK_THROWS_AS(case2_lower_bound_check(Cx(0.0), Cx(0.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("case2 bound holds across S samples") {
  CounterRng rng{85, 1};
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i);
    const double av = std::pow(10.0, rng.uniform(4 * k, 1.0, 3.0));
    const double vth = rng.uniform(4 * k + 1, 0.0, 6.283185307179586);
    const double rho = rng.uniform01(4 * k + 2);
    const double dth = rng.uniform(4 * k + 3, 0.0, 6.283185307179586);
    const Cx v = av * Cx(std::cos(vth), std::sin(vth));
    const Cx delta = rho * (1.0 + av) * Cx(std::cos(dth), std::sin(dth));
    const Cx u = v * v + delta;
    for (double R : {1.0, 5.0}) {
      CHECK(case2_lower_bound_check(u, v, R).holds);
    }
  }
}

TEST_CASE("closed-form disk minimum matches dense boundary sampling") {
  CounterRng rng{86, 1};
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i);
    const double av = rng.uniform(4 * k, 0.5, 20.0);
    const Cx v = av * Cx(std::cos(rng.uniform(4 * k + 1, 0.0, 6.28)),
                         std::sin(rng.uniform(4 * k + 1, 0.0, 6.28)));
    const Cx delta = rng.uniform01(4 * k + 2) * (1.0 + av) *
                     Cx(std::cos(rng.uniform(4 * k + 3, 0.0, 6.28)),
                        std::sin(rng.uniform(4 * k + 3, 0.0, 6.28)));
    const Cx u = v * v + delta;
    const double R = 2.0;
    const double closed = std::max(0.0, std::abs(u) - std::abs(v) * R);

    // dense min over the boundary circle and the center
    double dense = std::abs(u);
    const int n = 1 << 14;
    for (int j = 0; j < n; ++j) {
      const double th = 6.283185307179586 * j / n;
      dense = std::min(dense,
                       std::abs(u + v * R * Cx(std::cos(th), std::sin(th))));
    }
    // grid resolution: arc steps move the argument by at most |v| R dtheta
    const double tol = std::abs(v) * R * 6.29 / n + 1e-9;
    CHECK(closed <= dense + 1e-12);
    CHECK(dense <= closed + tol);
  }
}

TEST_CASE("marty probe examples") {
  const CoeffPair origin{Cx(0.0), Cx(0.0), {}};
  CHECK(marty_probe(1.0, std::span<const CoeffPair>(&origin, 1)) == 0.0);

  const CoeffPair unit{Cx(0.0), Cx(1.0), {}};
  CHECK(marty_probe(1.0, std::span<const CoeffPair>(&unit, 1)) == 1.0);

  // decay along delta = 0, |v| in {1e2, 1e3, 1e4}
  std::vector<double> probes;
  for (double av : {1e2, 1e3, 1e4}) {
    const CoeffPair c{Cx(av * av), Cx(av), {}};
    probes.push_back(marty_probe(1.0, std::span<const CoeffPair>(&c, 1)));
  }
  CHECK(probes[0] > probes[1]);
  CHECK(probes[1] > probes[2]);

  const CoeffPair bad{Cx(5.0), Cx(0.0), {}};
  CHECK_THROWS_AS(marty_probe(1.0, std::span<const CoeffPair>(&bad, 1)),
                  std::invalid_argument);
}

TEST_CASE("marty probe is uniformly bounded over S") {
  // sup over S of the probe is 1 + sqrt(2) (attained in the |v| <= 1+sqrt2
  // regime where the affine map can vanish on the disk).
  const double uniform_bound = 1.0 + std::sqrt(2.0) + 1e-9;
  CounterRng rng{87, 1};
  std::vector<CoeffPair> samples;
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i);
    const double av = std::pow(10.0, rng.uniform(4 * k, -2.0, 4.0));
    const double vth = rng.uniform(4 * k + 1, 0.0, 6.283185307179586);
    const double rho = rng.uniform01(4 * k + 2);
    const double dth = rng.uniform(4 * k + 3, 0.0, 6.283185307179586);
    const Cx v = av * Cx(std::cos(vth), std::sin(vth));
    const Cx delta = rho * (1.0 + av) * Cx(std::cos(dth), std::sin(dth));
    samples.push_back(CoeffPair{v * v + delta, v, {}});
  }
  CHECK(marty_probe(1.0, samples) <= uniform_bound);
}

TEST_CASE("subsequence demo, bounded case") {
  const SubseqReport rep = subsequence_demo(SubseqCase::Bounded, 1000);
  CHECK(rep.bounds_hold);
  CHECK(rep.converging);
  CHECK(rep.rows.back().n == 1000);
  // at n = 1000, R = 1 the closed-form distance is (1/n)(2 + 1/n + R)
  CHECK(rep.rows.back().metric <= 1e-2);
  CHECK(rep.rows.back().metric ==
        doctest::Approx((1.0 / 1000) * (2.0 + 1.0 / 1000 + 1.0)));
}

TEST_CASE("subsequence demo, unbounded case") {
  const SubseqReport rep = subsequence_demo(SubseqCase::Unbounded, 128);
  CHECK(rep.bounds_hold);
  CHECK(rep.converging);
  // chordal distance to infinity dies off
  CHECK(rep.rows.back().chordal_to_inf < 1e-3);
  // spot value: at n = 100, R = 1 the lower bound is 100^2 - 2*100 - 1
  const SubseqReport spot = subsequence_demo(SubseqCase::Unbounded, 100);
  CHECK(spot.rows.back().n == 100);
  CHECK(spot.rows.back().bound == 100.0 * 100.0 - 2.0 * 100.0 - 1.0);
  CHECK(spot.rows.back().metric >= spot.rows.back().bound);
}
