#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "fbtube/kernels/orbit_kernel.hpp"
#include "fbtube/rng.hpp"

using namespace fbtube;
using namespace fbtube::kernels;

namespace {

struct Batch {
  std::vector<double> z1r, z1i, z2r, z2i;

  std::size_t size() const { return z1r.size(); }
  OrbitBatch view() const { return {z1r, z1i, z2r, z2i}; }

  void push(Cx a, Cx b) {
    z1r.push_back(a.real());
    z1i.push_back(a.imag());
    z2r.push_back(b.real());
    z2i.push_back(b.imag());
  }
};

struct Results {
  std::vector<std::uint8_t> status;
  std::vector<std::int32_t> iters;
  std::vector<double> norms;

  explicit Results(std::size_t n) : status(n), iters(n), norms(n) {}
  OrbitOut view() {
    return {std::span<std::uint8_t>(status), std::span<std::int32_t>(iters),
            std::span<double>(norms)};
  }
};

// Points spread over the interesting scales: deep inside the local basin,
// moderate, and far out.
Batch mixed_batch(std::uint64_t seed, std::size_t n) {
  CounterRng rng{seed, 1};
  CounterRng scale{seed, 2};
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::pow(10.0, scale.uniform(i, -2.0, 2.0));
    const C2Point p = rng.bidisk(i, s, s);
    b.push(p.z1, p.z2);
  }
  return b;
}

}  // namespace

TEST_CASE("scalar batch matches single-point classification") {
  Batch b = mixed_batch(17, 257);
  Results r(b.size());
  classify_batch(b.view(), {}, r.view(), Kind::Scalar);
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::uint8_t st;
    std::int32_t it;
    double fn;
    classify_one(b.z1r[i], b.z1i[i], b.z2r[i], b.z2i[i], {}, st, it, fn);
    CHECK(st == r.status[i]);
    CHECK(it == r.iters[i]);
    CHECK(std::bit_cast<std::uint64_t>(fn) ==
          std::bit_cast<std::uint64_t>(r.norms[i]));
  }
}

TEST_CASE("scalar and AVX2 backends are bitwise identical") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available on this host; dispatch falls back to scalar");
    return;
  }
  for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3),
                        std::size_t(4), std::size_t(5), std::size_t(7),
                        std::size_t(64), std::size_t(1001)}) {
    Batch b = mixed_batch(1000 + n, n);
    Results scalar(n), avx(n);
    classify_batch(b.view(), {}, scalar.view(), Kind::Scalar);
    classify_batch(b.view(), {}, avx.view(), Kind::Avx2);
    for (std::size_t i = 0; i < n; ++i) {
      INFO("n=", n, " i=", i);
      CHECK(scalar.status[i] == avx.status[i]);
      CHECK(scalar.iters[i] == avx.iters[i]);
      CHECK(std::bit_cast<std::uint64_t>(scalar.norms[i]) ==
            std::bit_cast<std::uint64_t>(avx.norms[i]));
    }
  }
}

TEST_CASE("backends agree on all verdict classes") {
  Batch b;
  b.push(Cx(0.0), Cx(0.0));            // attracted instantly
  b.push(Cx(0.0), Cx(10.0));           // escapes
  b.push(Cx(0.1), Cx(0.1));            // attracted instantly
  b.push(Cx(40.0), Cx(3.0));           // D2-ish, escapes
  b.push(Cx(1.0), Cx(1.0));            // needs iteration
  Results scalar(b.size());
  classify_batch(b.view(), {}, scalar.view(), Kind::Scalar);
  CHECK(scalar.status[0] == kStatusAttracted);
  CHECK(scalar.iters[0] == 0);
  CHECK(scalar.status[1] == kStatusEscaped);
  CHECK(scalar.status[2] == kStatusAttracted);
  CHECK(scalar.iters[2] == 0);

  if (avx2_available()) {
    Results avx(b.size());
    classify_batch(b.view(), {}, avx.view(), Kind::Avx2);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(scalar.status[i] == avx.status[i]);
      CHECK(scalar.iters[i] == avx.iters[i]);
    }
  }
}

TEST_CASE("unknown verdict reports the iteration cap") {
  // max_iter 0 is rejected at the public API, but the kernel accepts it and
  // reports the state of the initial iterate.
  Batch b;
  b.push(Cx(1.0), Cx(1.0));  // norm 1: neither attracted nor escaped at m=0
  Results r(1);
  classify_batch(b.view(), {0, 1e6}, r.view(), Kind::Scalar);
  CHECK(r.status[0] == kStatusUnknown);
  CHECK(r.iters[0] == 0);
  CHECK(r.norms[0] == 1.0);
}

TEST_CASE("batch validation") {
  Batch b = mixed_batch(3, 4);
  Results r(3);  // wrong size
  CHECK_THROWS_AS(classify_batch(b.view(), {}, r.view()),
                  std::invalid_argument);
  Results ok(4);
  CHECK_THROWS_AS(classify_batch(b.view(), {100, 0.1}, ok.view()),
                  std::invalid_argument);  // escape bound below 1/6
}

TEST_CASE("empty batch is a no-op") {
  Batch b;
  Results r(0);
  classify_batch(b.view(), {}, r.view());
}
