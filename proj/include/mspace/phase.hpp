#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mspace/model_space.hpp"

namespace mspace {

/// Closed-form phase derivative tau'(x) = sigma + sum_n 2 Im z_n / |x - z_n|^2.
/// Strictly positive; coincides with 2 pi ||k_x||^2.
double phase_derivative(const InnerFunctionSpec& f, double x);

/// Extension-parameter conversion: e^{i alpha} = (F(i) + e^{i beta}) /
/// (1 + conj(F(i)) e^{i beta}). The denominator cannot vanish (|F(i)| < 1).
double alpha_of_beta(const InnerFunctionSpec& f, double beta);

/// Inverse conversion: e^{i beta} = (e^{i alpha} - F(i)) /
/// (1 - conj(F(i)) e^{i alpha}).
double beta_of_alpha(const InnerFunctionSpec& f, double alpha);

/// The eigenvalues of one self-adjoint extension inside a window: all
/// solutions of tau(lambda) = beta + 2 pi n, strictly increasing, with the
/// branch indices n recorded alongside.
struct SpectrumReport {
  double beta = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::vector<double> eigenvalues;
  std::vector<long long> n_indices;
};

/// The unwrapped phase tau with F(x) = e^{i tau(x)}, anchored at
/// tau(0) = Arg F(0) in (-pi, pi]. The antiderivative of the closed-form
/// tau' is elementary (a sum of atan2 terms), so tau is evaluated exactly
/// rather than by quadrature; a monotone cache grid with per-interval
/// increase < pi/4 is kept for root bracketing.
///
/// Immutable after construction; safe for concurrent readers.
class PhaseFunction {
 public:
  explicit PhaseFunction(SpecPtr spec, double cache_lo = -50.0,
                         double cache_hi = 50.0);

  const SpecPtr& spec() const { return spec_; }

  /// tau(x): continuous, strictly increasing, e^{i tau(x)} = F(x).
  double value(double x) const;

  /// tau'(x) > 0.
  double derivative(double x) const;

  /// tau(0), the principal argument of F(0).
  double anchor() const { return anchor_; }

  const std::vector<std::pair<double, double>>& cache() const {
    return cache_;
  }

  /// All eigenvalues of the extension labeled by beta in [window_lo,
  /// window_hi], found by safeguarded Newton on the monotone tau. Each root
  /// is verified against |tau(lambda) - (beta + 2 pi n)| < tau_tol and
  /// |F(lambda) - e^{i beta}| < eigen_tol. Windows holding more than
  /// max_count roots are rejected.
  SpectrumReport spectrum(double beta, double window_lo, double window_hi,
                          double tau_tol = 1e-10, double eigen_tol = 1e-8,
                          std::size_t max_count = kMaxEigenvalues) const;

  /// True iff the two extensions' eigenvalues strictly interleave in the
  /// window. Requires beta1 != beta2 mod 2pi and nonempty spectra.
  bool alternation_check(double beta1, double beta2, double window_lo,
                         double window_hi) const;

  /// Returns beta = tau(x) mod 2pi and verifies that x is an eigenvalue of
  /// that extension (residual < residual_tol) and of no other sampled one
  /// (separation > separation_tol / tau'(x)). Throws on violation.
  double coverage_check(double x, double residual_tol = 1e-9,
                        double separation_tol = 1e-6) const;

  static constexpr std::size_t kMaxEigenvalues = 1000000;

 private:
  double raw_phase(double x) const;
  double solve_level(double target, double lo, double hi) const;

  SpecPtr spec_;
  double raw_at_zero_ = 0.0;
  double anchor_ = 0.0;
  std::vector<std::pair<double, double>> cache_;
};

/// Map t to [0, 2pi).
double mod_two_pi(double t);

}  // namespace mspace
