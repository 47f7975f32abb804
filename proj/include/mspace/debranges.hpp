#pragma once

#include "mspace/model_space.hpp"

namespace mspace {

/// A structured entire function
///
///   E(z) = gamma_e * e^{-i sigma_e z} * prod_n (1 - z / w_n) * [exp factors],
///
/// with w_n = conj(z_n) in the closed lower half-plane and sigma_e = sigma/2.
/// Satisfies the de Branges inequality |E(z)| > |E(conj(z))| above the real
/// axis and E^*/E = F for the inner function it was built from. The optional
/// convergence-exponent factors e^{(p_n + p_n^*)/2} from the infinite-product
/// form are star-symmetric, so they cancel in the ratio E^*/E.
struct DeBrangesSpec {
  Complex gamma_e{1.0, 0.0};
  double sigma_e = 0.0;
  std::vector<Complex> zeros_conj;
  bool convergence_exponents = false;
};

/// Construct E with F = E^*/E: zeros conj(z_n), sigma_e = sigma/2, and
/// gamma_e calibrated so the ratio matches F at x = 0 (E(0) = gamma_e never
/// vanishes since the zeros are non-real), which fixes the identity globally.
DeBrangesSpec build_e(const InnerFunctionSpec& f,
                      bool convergence_exponents = false);

/// E(z). Entire; guarded against overflow for |z| beyond 1e150.
Complex eval_e(const DeBrangesSpec& e, Complex z);

/// E^*(z) = conj(E(conj(z))).
Complex eval_e_star(const DeBrangesSpec& e, Complex z);

/// |E^*(x)/E(x) - F(x)| at a real point.
double ratio_residual(const DeBrangesSpec& e, const InnerFunctionSpec& f,
                      double x);

/// Reproducing kernel of H(E) transported through the isometry
/// f -> E f from K^2_F: K(w, z) = E(z) conj(E(w)) k_w^F(z). In the
/// Paley-Wiener case this is sin(omega (z - conj(w))) / (pi (z - conj(w))).
Complex he_kernel(const DeBrangesSpec& e, const InnerFunctionSpec& f, Complex w,
                  Complex z);

struct WeightedInnerProduct {
  Complex value{};
  double tail_estimate = 0.0;
};

/// Quadrature cross-check of the exact Gram inner product: approximates
/// integral of (f E)(x) conj((g E)(x)) |E(x)|^{-2} dx over the window by
/// composite Gauss-Legendre panels. The tail beyond the window is estimated
/// from the |x|^{-2} kernel decay and reported, never silently added.
WeightedInnerProduct l2_weight_inner_product(const DeBrangesSpec& e,
                                             const SpaceElement& f,
                                             const SpaceElement& g,
                                             double window_lo, double window_hi,
                                             int quad_points);

}  // namespace mspace
