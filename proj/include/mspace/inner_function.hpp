#pragma once

#include <string>
#include <vector>

#include "mspace/mobius.hpp"

namespace mspace {

/// A meromorphic inner function on the upper half-plane,
///
///   F(z) = gamma * e^{i sigma z} * prod_n (z - z_n)/(z - conj(z_n)),
///
/// with |gamma| = 1, sigma >= 0 and finitely many zeros z_n, Im z_n > 0.
/// Any unimodular normalizers of the Blaschke factors are absorbed into
/// gamma. |F(x)| = 1 on the real axis; |F(z)| <= 1 above it; the poles sit
/// at the reflected points conj(z_n).
///
/// Genuinely infinite zero families are represented by a finite truncation
/// plus the declared tail_im_sum_diverges flag, which is consumed only by
/// the density reporting. Duplicate zeros are rejected; multiplicity can be
/// emulated by perturbing a zero by ~1e-9.
class InnerFunctionSpec {
 public:
  InnerFunctionSpec(Complex gamma, double sigma, std::vector<Complex> zeros,
                    bool tail_im_sum_diverges = false, std::string label = {});

  const Complex& gamma() const { return gamma_; }
  double sigma() const { return sigma_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  bool tail_im_sum_diverges() const { return tail_im_sum_diverges_; }
  const std::string& label() const { return label_; }
  Complex value_at_i() const { return value_at_i_; }

  /// F(z). Throws a pole error at z = conj(z_n).
  Complex eval(Complex z) const;

  /// F'(z) via the logarithmic derivative
  /// F'/F = i sigma + sum_n [ 1/(z - z_n) - 1/(z - conj(z_n)) ].
  Complex derivative(Complex z) const;

  /// F''(z) = F * (L^2 + L') with L = F'/F. Needed for the kernel's
  /// diagonal Taylor expansion.
  Complex second_derivative(Complex z) const;

  /// Characteristic function (F(z) - F(i)) / (1 - conj(F(i)) F(z)).
  /// Vanishes at z = i; unimodular on the real axis.
  Complex characteristic(Complex z) const;

  /// Disk-side characteristic w(v) = (g(v) - g(0)) / (1 - conj(g(0)) g(v))
  /// where g = F o mu^{-1} is the disk pullback; w(0) = 0.
  Complex disk_characteristic(Complex v) const;

  bool operator==(const InnerFunctionSpec& other) const;

 private:
  Complex log_derivative(Complex z) const;
  void check_pole(Complex z, const char* where) const;

  Complex gamma_;
  double sigma_ = 0.0;
  std::vector<Complex> zeros_;
  bool tail_im_sum_diverges_ = false;
  std::string label_;
  Complex value_at_i_;
};

}  // namespace mspace
