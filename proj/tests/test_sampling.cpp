#include <doctest.h>

#include "mspace/sampling.hpp"
#include "support.hpp"

using namespace mspace;
using testsupport::grid;
using testsupport::kPi;
using testsupport::kTwoPi;

namespace {

std::vector<Sample> samples_of(const SamplingSequence& seq,
                               const SpaceElement& f) {
  std::vector<Sample> s;
  s.reserve(seq.lambdas.size());
  for (double lambda : seq.lambdas) {
    s.push_back(Sample{lambda, evaluate(f, lambda)});
  }
  return s;
}

}  // namespace

TEST_CASE("Shannon sequence: unit spacing pi/Omega") {
  // F = e^{2 i Omega z}, Omega = pi: tau = 2 pi x, beta = 0 gives the integers
  const auto pw = testsupport::paley_wiener();
  const SamplingSequence seq = build_sequence(pw, 0.0, -5.2, 5.2);
  REQUIRE(seq.lambdas.size() == 11);
  for (std::size_t i = 0; i < seq.lambdas.size(); ++i) {
    CHECK(std::abs(seq.lambdas[i] - (static_cast<double>(i) - 5.0)) < 1e-10);
  }
}

TEST_CASE("pure exponential: lambdas are 2 pi Z with norms 1/(2 pi)") {
  const auto exp1 = testsupport::exp1();
  const SamplingSequence seq = build_sequence(exp1, 0.0, -10.0, 10.0);
  REQUIRE(seq.lambdas.size() == 3);
  CHECK(std::abs(seq.lambdas[0] + kTwoPi) < 1e-10);
  CHECK(std::abs(seq.lambdas[1]) < 1e-12);
  CHECK(std::abs(seq.lambdas[2] - kTwoPi) < 1e-10);
  for (double ns : seq.norms_sq) {
    CHECK(ns == doctest::Approx(1.0 / kTwoPi).epsilon(1e-12));
  }
}

TEST_CASE("empty window is rejected") {
  const auto exp1 = testsupport::exp1();
  CHECK_THROWS_AS(build_sequence(exp1, 3.0, -0.5, 0.5), Error);
}

TEST_CASE("sampling kernels have a diagonal Gram matrix") {
  for (const auto& spec : testsupport::bundled_specs()) {
    CAPTURE(spec->label());
    const SamplingSequence seq = build_sequence(spec, 2.0, -20.0, 20.0);
    for (std::size_t i = 0; i < seq.lambdas.size(); ++i) {
      for (std::size_t j = 0; j < seq.lambdas.size(); ++j) {
        const Complex g = kernel_eval(*spec, seq.lambdas[i], seq.lambdas[j]);
        if (i == j) {
          CHECK(g.real() == doctest::Approx(seq.norms_sq[i]).epsilon(1e-12));
        } else {
          CHECK(std::abs(g) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("normalized kernel interpolation: k_n(lambda_m)/||k_n||^2 = delta") {
  for (const auto& spec : testsupport::bundled_specs()) {
    const SamplingSequence seq = build_sequence(spec, 1.0, -20.0, 20.0);
    for (std::size_t n = 0; n < seq.lambdas.size(); ++n) {
      for (std::size_t m = 0; m < seq.lambdas.size(); ++m) {
        const Complex v =
            kernel_eval(*spec, seq.lambdas[n], seq.lambdas[m]) /
            seq.norms_sq[n];
        const double expected = n == m ? 1.0 : 0.0;
        CHECK(std::abs(v - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("reconstruction of a single sampling kernel is exact") {
  const auto spec = testsupport::mixed8();
  const SamplingSequence seq = build_sequence(spec, 0.7, -15.0, 15.0);
  REQUIRE(seq.lambdas.size() >= 2);
  const std::size_t m = seq.lambdas.size() / 2;
  const SpaceElement f =
      SpaceElement::kernel(spec, Complex{seq.lambdas[m], 0.0});
  const auto samples = samples_of(seq, f);
  for (double x : grid(-12, 12, 101)) {
    CHECK(std::abs(reconstruct(seq, samples, x) - evaluate(f, x)) < 1e-10);
  }
  // complex argument too
  const Complex z{0.3, 1.1};
  CHECK(std::abs(reconstruct(seq, samples, z) - evaluate(f, z)) < 1e-10);
}

TEST_CASE("all-zero samples reconstruct to zero") {
  const auto spec = testsupport::exp1();
  const SamplingSequence seq = build_sequence(spec, 0.0, -10.0, 10.0);
  std::vector<Sample> samples;
  for (double lambda : seq.lambdas) samples.push_back(Sample{lambda, {}});
  CHECK(std::abs(reconstruct(seq, samples, Complex{0.4, 0.2})) == 0.0);
}

TEST_CASE("reconstruction is exact on the span of in-window kernels") {
  for (const auto& spec : testsupport::bundled_specs()) {
    CAPTURE(spec->label());
    const SamplingSequence seq = build_sequence(spec, 0.5, -20.0, 20.0);
    std::vector<KernelTerm> terms;
    terms.push_back(KernelTerm{TermKind::Kernel,
                               Complex{seq.lambdas.front(), 0.0},
                               Complex{1.0, 0.0}});
    if (seq.lambdas.size() > 1) {
      terms.push_back(KernelTerm{TermKind::Kernel,
                                 Complex{seq.lambdas.back(), 0.0},
                                 Complex{0.0, 2.0}});
    }
    const SpaceElement f(spec, terms);
    const auto samples = samples_of(seq, f);
    double worst = 0.0;
    for (double x : grid(-18, 18, 101)) {
      worst =
          std::max(worst, std::abs(reconstruct(seq, samples, x) - evaluate(f, x)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("sample alignment and length are enforced") {
  const auto spec = testsupport::exp1();
  const SamplingSequence seq = build_sequence(spec, 0.0, -10.0, 10.0);
  std::vector<Sample> samples;
  for (double lambda : seq.lambdas) {
    samples.push_back(Sample{lambda, Complex{1.0, 0.0}});
  }
  samples[1].position += 1e-3;
  CHECK_THROWS_AS(reconstruct(seq, samples, Complex{0, 0}), Error);
  samples.pop_back();
  CHECK_THROWS_AS(reconstruct(seq, samples, Complex{0, 0}), Error);
}

TEST_CASE("Parseval residual vanishes on the span") {
  for (const auto& spec : testsupport::bundled_specs()) {
    CAPTURE(spec->label());
    const SamplingSequence seq = build_sequence(spec, 2.0, -20.0, 20.0);
    const SpaceElement single =
        SpaceElement::kernel(spec, Complex{seq.lambdas.front(), 0.0});
    CHECK(parseval_residual(single, seq) < 1e-10);

    std::vector<KernelTerm> terms;
    terms.push_back(KernelTerm{TermKind::Kernel,
                               Complex{seq.lambdas.front(), 0.0},
                               Complex{0.5, -1.0}});
    if (seq.lambdas.size() > 1) {
      terms.push_back(KernelTerm{TermKind::Kernel,
                                 Complex{seq.lambdas.back(), 0.0},
                                 Complex{2.0, 0.3}});
    }
    CHECK(parseval_residual(SpaceElement(spec, terms), seq) < 1e-9);
  }
}

TEST_CASE("large windows keep uniform spacing and pass the strided check") {
  const auto exp1 = testsupport::exp1();
  const SamplingSequence seq = build_sequence(exp1, 0.0, -4000.0, 4000.0);
  CHECK(seq.lambdas.size() > 1000);
  double min_gap = 1e300;
  for (std::size_t i = 1; i < seq.lambdas.size(); ++i) {
    min_gap = std::min(min_gap, seq.lambdas[i] - seq.lambdas[i - 1]);
  }
  CHECK(min_gap > 0.0);
  CHECK(min_gap == doctest::Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("Parseval residual decreases as the window grows") {
  const auto spec = testsupport::mixed3();
  const SpaceElement f = SpaceElement::kernel(spec, Complex{0.3, 0.4});
  const double r10 = parseval_residual(f, build_sequence(spec, 1.0, -10, 10));
  const double r20 = parseval_residual(f, build_sequence(spec, 1.0, -20, 20));
  const double r40 = parseval_residual(f, build_sequence(spec, 1.0, -40, 40));
  CHECK(r20 < r10);
  CHECK(r40 < r20);
}

TEST_CASE("shannon_reference basics") {
  // single sample 1 at x0 = 0: value at 0.5 is sin(pi/2)/(pi/2) = 2/pi
  const std::vector<Sample> one = {{0.0, Complex{1.0, 0.0}}};
  CHECK(shannon_reference(kPi, one, 0.5).real() ==
        doctest::Approx(2.0 / kPi).epsilon(1e-13));
  CHECK(shannon_reference(kPi, one, 0.0).real() == 1.0);
  CHECK_THROWS_AS(shannon_reference(-1.0, one, 0.0), Error);

  // at a node the series returns the sample exactly
  std::vector<Sample> samples;
  for (int n = -10; n <= 10; ++n) {
    samples.push_back(Sample{static_cast<double>(n), Complex{0.1 * n, -n * n * 0.01}});
  }
  for (const Sample& s : samples) {
    CHECK(std::abs(shannon_reference(kPi, samples, s.position) - s.value) <
          1e-12);
  }
}

TEST_CASE("kernel reconstruction transported by E agrees with the sinc series") {
  // In the Paley-Wiener picture g = E f is entire and the sinc interpolant of
  // g on the integers reproduces it; the model-space reconstruction of f
  // multiplied by E must match that series.
  const auto pw = testsupport::paley_wiener();
  const double omega = kPi;
  const SamplingSequence seq = build_sequence(pw, 0.0, -10.2, 10.2);
  std::vector<KernelTerm> terms = {
      KernelTerm{TermKind::Kernel, Complex{0.0, 0.0}, Complex{1.0, 0.0}},
      KernelTerm{TermKind::Kernel, Complex{3.0, 0.0}, Complex{0.0, 2.0}}};
  const SpaceElement f(pw, terms);
  const auto samples = samples_of(seq, f);

  auto e_at = [&](double x) { return std::exp(Complex{0.0, -omega * x}); };
  std::vector<Sample> e_samples = samples;
  for (Sample& s : e_samples) s.value *= e_at(s.position);

  double worst = 0.0;
  for (double x : grid(-8, 8, 101)) {
    const Complex lhs = e_at(x) * reconstruct(seq, samples, x);
    const Complex rhs = shannon_reference(omega, e_samples, x);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst < 1e-9);
}
