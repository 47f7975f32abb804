#include "mspace/sampling.hpp"

#include <cmath>

namespace mspace {

namespace {

constexpr double kAlignmentTol = 1e-9;
constexpr double kOrthogonalityTol = 1e-9;

double sinc(double t) {
  if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}

void verify_orthogonality(const SamplingSequence& seq) {
  const std::size_t n = seq.lambdas.size();
  const InnerFunctionSpec& f = *seq.spec;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const Complex ip = kernel_eval(f, seq.lambdas[i], seq.lambdas[j]);
    if (std::abs(ip) > kOrthogonalityTol) {
      fail(ErrorCode::Internal,
           "build_sequence: sampling kernels are not orthogonal");
    }
  };
  if (n <= 200) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) check_pair(i, j);
    }
    return;
  }
  // Large windows: adjacent pairs plus a strided sample keeps the
  // construction-time check linear.
  for (std::size_t i = 0; i + 1 < n; ++i) check_pair(i, i + 1);
  const std::size_t stride = n / 3;
  for (std::size_t i = 0; i + stride < n; i += stride) check_pair(i, i + stride);
  check_pair(0, n - 1);
}

}  // namespace

SamplingSequence build_sequence(SpecPtr spec, double beta, double window_lo,
                                double window_hi) {
  if (!spec) fail(ErrorCode::Validation, "build_sequence: null spec");
  PhaseFunction phase(spec, window_lo, window_hi);
  const SpectrumReport report = phase.spectrum(beta, window_lo, window_hi);
  if (report.eigenvalues.empty()) {
    fail(ErrorCode::EmptySpectrum,
         "build_sequence: no eigenvalue of this extension lies in the window");
  }
  SamplingSequence seq;
  seq.spec = std::move(spec);
  seq.beta = beta;
  seq.window_lo = window_lo;
  seq.window_hi = window_hi;
  seq.lambdas = report.eigenvalues;
  seq.n_indices = report.n_indices;
  seq.norms_sq.reserve(seq.lambdas.size());
  for (double lambda : seq.lambdas) {
    const double ns = kernel_norm_sq(*seq.spec, lambda);
    if (!(ns > 0.0)) {
      fail(ErrorCode::Internal, "build_sequence: non-positive kernel norm");
    }
    seq.norms_sq.push_back(ns);
  }
  verify_orthogonality(seq);
  return seq;
}

Complex reconstruct(const SamplingSequence& seq, std::span<const Sample> samples,
                    Complex z) {
  if (samples.size() != seq.lambdas.size()) {
    fail(ErrorCode::LengthMismatch,
         "reconstruct: sample count does not match the sampling sequence");
  }
  for (std::size_t n = 0; n < samples.size(); ++n) {
    if (std::abs(samples[n].position - seq.lambdas[n]) > kAlignmentTol) {
      fail(ErrorCode::SampleAlignment,
           "reconstruct: sample position " + std::to_string(n) +
               " does not match its sampling node");
    }
  }
  Complex sum{0.0, 0.0};
  for (std::size_t n = 0; n < samples.size(); ++n) {
    sum += samples[n].value * kernel_eval(*seq.spec, seq.lambdas[n], z) /
           seq.norms_sq[n];
  }
  return sum;
}

double parseval_residual(const SpaceElement& f, const SamplingSequence& seq) {
  const double total = inner_product(f, f).real();
  double partial = 0.0;
  for (std::size_t n = 0; n < seq.lambdas.size(); ++n) {
    const Complex v = evaluate(f, seq.lambdas[n]);
    partial += std::norm(v) / seq.norms_sq[n];
  }
  return std::abs(total - partial);
}

Complex shannon_reference(double omega, std::span<const Sample> samples,
                          double x) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    fail(ErrorCode::Validation, "shannon_reference: omega must be > 0");
  }
  Complex sum{0.0, 0.0};
  for (const Sample& s : samples) {
    sum += s.value * sinc(omega * (x - s.position));
  }
  return sum;
}

}  // namespace mspace
