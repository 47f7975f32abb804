#include <doctest.h>

#include "mspace/inner_function.hpp"
#include "support.hpp"

using namespace mspace;
using testsupport::grid;
using testsupport::kPi;
using testsupport::random_upper;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("construction validates its invariants") {
  CHECK_THROWS_AS(InnerFunctionSpec({2, 0}, 1.0, {}), Error);
  CHECK_THROWS_AS(InnerFunctionSpec({1, 0}, -0.5, {}), Error);
  CHECK_THROWS_AS(InnerFunctionSpec({1, 0}, 0.0, {{0.0, -1.0}}), Error);
  CHECK_THROWS_AS(InnerFunctionSpec({1, 0}, 0.0, {{0.0, 0.0}}), Error);
  CHECK_THROWS_AS(InnerFunctionSpec({1, 0}, 1.0, {{1.0, 1.0}, {1.0, 1.0}}),
                  Error);
  CHECK_THROWS_AS(InnerFunctionSpec({1, 0}, 0.0, {}), Error);  // constant
  CHECK_NOTHROW(InnerFunctionSpec({0.6, 0.8}, 0.0, {{0.0, 1.0}}));
}

TEST_CASE("eval at reference points") {
  const auto exp1 = testsupport::exp1();
  CHECK(std::abs(exp1->eval(Complex{0, 0}) - Complex{1, 0}) < 1e-15);
  // |F(i)| = e^{-1}
  CHECK(std::abs(exp1->eval(kI) - Complex{std::exp(-1.0), 0}) < 1e-15);

  const auto b1 = testsupport::blaschke1();
  // oracle: direct division (0 - i)/(0 + i) = -1
  const Complex expected = (Complex{0, 0} - kI) / (Complex{0, 0} + kI);
  CHECK(std::abs(expected - Complex{-1, 0}) < 1e-15);
  CHECK(std::abs(b1->eval(Complex{0, 0}) - expected) < 1e-15);
}

TEST_CASE("eval rejects poles") {
  const auto b1 = testsupport::blaschke1();
  CHECK_THROWS_AS(b1->eval(Complex{0.0, -1.0}), Error);
}

TEST_CASE("derivative at reference points") {
  const auto exp1 = testsupport::exp1();
  CHECK(std::abs(exp1->derivative(Complex{0, 0}) - kI) < 1e-15);

  // oracle: d/dz (z-i)/(z+i) = 2i/(z+i)^2, at 0: 2i/(i^2) = -2i
  const auto b1 = testsupport::blaschke1();
  const Complex expected = 2.0 * kI / (kI * kI);
  CHECK(std::abs(expected - Complex{0, -2}) < 1e-15);
  CHECK(std::abs(b1->derivative(Complex{0, 0}) - expected) < 1e-14);
}

TEST_CASE("derivative agrees with central finite differences") {
  std::mt19937_64 rng(23);
  const double h = 1e-6;
  for (const auto& spec : testsupport::bundled_specs()) {
    for (int k = 0; k < 50; ++k) {
      const Complex z = random_upper(rng, *spec, 20.0, 3.0);
      const Complex fd = (spec->eval(z + h) - spec->eval(z - h)) / (2.0 * h);
      const Complex d = spec->derivative(z);
      CHECK(std::abs(fd - d) / std::max(1e-12, std::abs(d)) < 1e-6);
    }
  }
}

TEST_CASE("second derivative agrees with finite differences of F'") {
  std::mt19937_64 rng(29);
  const double h = 1e-6;
  for (const auto& spec : testsupport::bundled_specs()) {
    for (int k = 0; k < 20; ++k) {
      const Complex z = random_upper(rng, *spec, 10.0, 2.0);
      const Complex fd =
          (spec->derivative(z + h) - spec->derivative(z - h)) / (2.0 * h);
      const Complex d2 = spec->second_derivative(z);
      CHECK(std::abs(fd - d2) / std::max(1e-12, std::abs(d2)) < 1e-5);
    }
  }
}

TEST_CASE("characteristic function vanishes at i and is unimodular on R") {
  for (const auto& spec : testsupport::bundled_specs()) {
    CAPTURE(spec->label());
    CHECK(std::abs(spec->characteristic(kI)) < 1e-14);
    for (double x : grid(-30, 30, 301)) {
      CHECK(std::abs(std::abs(spec->characteristic(Complex{x, 0})) - 1.0) <
            1e-10);
    }
  }
}

TEST_CASE("characteristic scalar oracle for the pure exponential") {
  // (F(0) - F(i)) / (1 - conj(F(i)) F(0)) with F(0)=1, F(i)=e^{-1} equals 1
  const auto exp1 = testsupport::exp1();
  const double e1 = std::exp(-1.0);
  const Complex expected = (1.0 - e1) / (1.0 - e1);
  CHECK(std::abs(exp1->characteristic(Complex{0, 0}) - expected) < 1e-14);
}

TEST_CASE("disk-side characteristic") {
  const auto b1 = testsupport::blaschke1();
  CHECK(std::abs(b1->disk_characteristic(Complex{0, 0})) < 1e-15);
  // pullback of (z-i)/(z+i) through mu^{-1} is the identity map on the disk
  CHECK(std::abs(b1->disk_characteristic(Complex{0.5, 0}) - Complex{0.5, 0}) <
        1e-14);
  CHECK_THROWS_AS(b1->disk_characteristic(Complex{1.5, 0}), Error);

  // composition identity: disk_characteristic(mu(z)) = characteristic(z)
  std::mt19937_64 rng(31);
  for (const auto& spec : testsupport::bundled_specs()) {
    for (int k = 0; k < 100; ++k) {
      const Complex z = random_upper(rng, *spec, 20.0, 4.0);
      const Complex lhs = spec->disk_characteristic(to_disk(z));
      const Complex rhs = spec->characteristic(z);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("unimodularity on a dense grid") {
  for (const auto& spec : testsupport::bundled_specs()) {
    CAPTURE(spec->label());
    double worst = 0.0;
    for (double x : grid(-50, 50, 2001)) {
      worst = std::max(worst, std::abs(std::abs(spec->eval(x)) - 1.0));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("Schwarz reflection F(z) conj(F(conj z)) = 1") {
  std::mt19937_64 rng(37);
  for (const auto& spec : testsupport::bundled_specs()) {
    for (int k = 0; k < 100; ++k) {
      const Complex z = random_upper(rng, *spec, 30.0, 3.0);
      const Complex prod = spec->eval(z) * std::conj(spec->eval(std::conj(z)));
      CHECK(std::abs(prod - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("modulus bound on the upper half-plane") {
  std::mt19937_64 rng(41);
  for (const auto& spec : testsupport::bundled_specs()) {
    for (int k = 0; k < 1000; ++k) {
      const Complex z = random_upper(rng, *spec, 40.0, 5.0);
      CHECK(std::abs(spec->eval(z)) <= 1.0 + 1e-12);
    }
  }
}
