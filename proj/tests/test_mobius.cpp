#include <doctest.h>

#include "mspace/mobius.hpp"
#include "support.hpp"

using namespace mspace;
using testsupport::kPi;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("to_disk at reference points") {
  CHECK(std::abs(to_disk(kI)) < 1e-15);
  CHECK(std::abs(to_disk(Complex{0, 0}) - Complex{-1, 0}) < 1e-15);

  // oracle: direct complex division (1 - i) / (1 + i)
  const Complex expected = (Complex{1, 0} - kI) / (Complex{1, 0} + kI);
  CHECK(std::abs(expected - Complex{0, -1}) < 1e-15);
  CHECK(std::abs(to_disk(Complex{1, 0}) - expected) < 1e-15);
}

TEST_CASE("to_disk pole at -i") {
  CHECK_THROWS_AS(to_disk(Complex{0, -1}), Error);
  CHECK_THROWS_AS(to_disk(Complex{std::nan(""), 0.0}), Error);
}

TEST_CASE("to_halfplane at reference points") {
  CHECK(std::abs(to_halfplane(Complex{0, 0}) - kI) < 1e-15);
  CHECK(std::abs(to_halfplane(Complex{-1, 0})) < 1e-15);
  // numerically inverts to_disk(1) = -i
  CHECK(std::abs(to_halfplane(Complex{0, -1}) - Complex{1, 0}) < 1e-15);
  CHECK_THROWS_AS(to_halfplane(Complex{1, 0}), Error);
}

TEST_CASE("disk_automorphism reference values") {
  const Complex a{0.3, -0.2};
  CHECK(std::abs(disk_automorphism(a, a)) < 1e-15);
  CHECK(std::abs(disk_automorphism(Complex{0, 0}, Complex{0, 0})) < 1e-15);
  // unimodular boundary value: (1 - 1/2)/(1 - 1/2) = 1
  CHECK(std::abs(disk_automorphism(Complex{1, 0}, Complex{0.5, 0}) -
                 Complex{1, 0}) < 1e-15);
  CHECK_THROWS_AS(disk_automorphism(Complex{0, 0}, Complex{1, 0}), Error);
  CHECK_THROWS_AS(disk_automorphism(Complex{0, 0}, Complex{0.8, 0.9}), Error);
}

TEST_CASE("to_disk maps the half-plane into the disk and R onto the circle") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Complex z{testsupport::uniform(rng, -100, 100),
                    testsupport::uniform(rng, 1e-6, 100)};
    CHECK(std::abs(to_disk(z)) < 1.0);
  }
  for (int k = 0; k < 1000; ++k) {
    const double x = testsupport::uniform(rng, -100, 100);
    CHECK(std::abs(std::abs(to_disk(Complex{x, 0})) - 1.0) < 1e-12);
  }
}

TEST_CASE("round trip to_halfplane(to_disk(z)) = z") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const Complex z{testsupport::uniform(rng, -50, 50),
                    testsupport::uniform(rng, -50, 50)};
    if (std::abs(z + kI) < 1e-3) continue;
    const Complex back = to_halfplane(to_disk(z));
    CHECK(std::abs(back - z) < 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("disk_automorphism preserves the unit circle") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 500; ++k) {
    const Complex v = std::polar(1.0, testsupport::uniform(rng, 0, 2 * kPi));
    const Complex a =
        std::polar(testsupport::uniform(rng, 0, 0.95),
                   testsupport::uniform(rng, 0, 2 * kPi));
    CHECK(std::abs(std::abs(disk_automorphism(v, a)) - 1.0) < 1e-12);
  }
}
