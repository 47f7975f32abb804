#pragma once

#include <span>

#include "mspace/phase.hpp"

namespace mspace {

struct Sample {
  double position = 0.0;
  Complex value{};
};

/// A total orthogonal sampling sequence inside a window: the eigenvalues of
/// the extension labeled by beta together with their kernel norms. The
/// kernels {k_lambda_n} form an orthogonal set; pairwise orthogonality is
/// verified at construction.
struct SamplingSequence {
  SpecPtr spec;
  double beta = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::vector<double> lambdas;
  std::vector<long long> n_indices;
  std::vector<double> norms_sq;
};

SamplingSequence build_sequence(SpecPtr spec, double beta, double window_lo,
                                double window_hi);

/// Windowed Kramer reconstruction sum_n f(lambda_n) k_{lambda_n}(z) /
/// ||k_{lambda_n}||^2. Samples are aligned by index against seq.lambdas and
/// checked against their stated positions (|position - lambda_n| < 1e-9).
/// Exact on the span of the in-window kernels.
Complex reconstruct(const SamplingSequence& seq, std::span<const Sample> samples,
                    Complex z);

/// | <f,f> - sum_n |f(lambda_n)|^2 / ||k_{lambda_n}||^2 |. Zero (to roundoff)
/// when f lies in the span of the in-window kernels; otherwise the truncation
/// residual is reported as-is.
double parseval_residual(const SpaceElement& f, const SamplingSequence& seq);

/// Classical sinc interpolation sum_n f(x_n) sin(omega (x - x_n)) /
/// (omega (x - x_n)), the reference special case for F = e^{2 i omega z}.
Complex shannon_reference(double omega, std::span<const Sample> samples,
                          double x);

}  // namespace mspace
