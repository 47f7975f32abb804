#pragma once

#include <memory>
#include <vector>

#include "mspace/inner_function.hpp"

namespace mspace {

using SpecPtr = std::shared_ptr<const InnerFunctionSpec>;

enum class TermKind { Kernel, ConjugateKernel };

/// One summand of a model-space element: coefficient * k_node or
/// coefficient * C_F k_node. Nodes live in the closed upper half-plane.
struct KernelTerm {
  TermKind kind = TermKind::Kernel;
  Complex node{};
  Complex coefficient{};
};

/// A finite combination of kernels and conjugate kernels. These span a dense
/// subspace of K^2_F and are closed under evaluation, conjugation and exact
/// Gram inner products, so no quadrature enters the algebra.
class SpaceElement {
 public:
  SpaceElement(SpecPtr spec, std::vector<KernelTerm> terms);

  static SpaceElement zero(SpecPtr spec);
  static SpaceElement kernel(SpecPtr spec, Complex node,
                             Complex coefficient = Complex{1.0, 0.0});

  const SpecPtr& spec() const { return spec_; }
  const std::vector<KernelTerm>& terms() const { return terms_; }

 private:
  SpecPtr spec_;
  std::vector<KernelTerm> terms_;
};

/// Reproducing kernel k_w(z) = (i/2pi)(1 - conj(F(w)) F(z)) / (z - conj(w)).
/// For real w the diagonal singularity is removable; within 1e-6 of it the
/// value is computed from the closed-form limit (1/2pi i) conj(F) F' plus a
/// first-order Taylor correction, which avoids catastrophic cancellation.
Complex kernel_eval(const InnerFunctionSpec& f, Complex w, Complex z);

/// ||k_x||^2 = k_x(x) = (1/2pi i) conj(F(x)) F'(x), strictly positive on R.
double kernel_norm_sq(const InnerFunctionSpec& f, double x);

/// Conjugate kernel (C_F k_w)(z) = (-i/2pi)(F(z) - F(w)) / (z - w), with the
/// same near-diagonal series treatment at z = w.
Complex conjugate_kernel_eval(const InnerFunctionSpec& f, Complex w, Complex z);

/// Pointwise value of the combination; linear in the literal coefficients.
Complex evaluate(const SpaceElement& f, Complex z);

/// Exact Gram inner product, conjugate-linear in the second argument.
/// Term pairs reduce to kernel evaluations through the reproducing identity
/// <k_w, k_v> = k_w(v) and the conjugation rules <Cf, Cg> = <g, f>,
/// <C k_w, k_v> = (C_F k_w)(v).
Complex inner_product(const SpaceElement& f, const SpaceElement& g);

double norm(const SpaceElement& f);

/// The conjugation C_F: swaps kernel kinds and conjugates coefficients.
/// An involution; norm-preserving; anti-linear.
SpaceElement conjugate(const SpaceElement& f);

SpaceElement scale(const SpaceElement& f, Complex c);

struct DeficiencyPair {
  SpaceElement psi_plus;
  SpaceElement psi_minus;
};

/// psi_minus = i 2pi k_i and psi_plus = -C_F psi_minus; the pair has equal
/// norms and parametrizes the one-parameter extension family.
DeficiencyPair deficiency_vectors(const SpecPtr& spec);

}  // namespace mspace
