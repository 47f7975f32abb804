#include "mspace/model_space.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace mspace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kImagUnit{0.0, 1.0};
constexpr double kPoleGuard = 1e-300;
constexpr double kDiagonalSwitch = 1e-6;

const InnerFunctionSpec& require_spec(const SpecPtr& spec) {
  if (!spec) fail(ErrorCode::Validation, "null spec");
  return *spec;
}

void require_same_spec(const SpaceElement& f, const SpaceElement& g) {
  if (f.spec() == g.spec()) return;
  if (f.spec() && g.spec() && *f.spec() == *g.spec()) return;
  fail(ErrorCode::MixedSpec, "elements belong to different model spaces");
}

// <a-term, b-term> without the coefficients.
Complex term_pair(const InnerFunctionSpec& f, const KernelTerm& a,
                  const KernelTerm& b) {
  const bool ak = a.kind == TermKind::Kernel;
  const bool bk = b.kind == TermKind::Kernel;
  if (ak && bk) return kernel_eval(f, a.node, b.node);
  if (!ak && bk) return conjugate_kernel_eval(f, a.node, b.node);
  if (ak && !bk) return std::conj(conjugate_kernel_eval(f, b.node, a.node));
  return kernel_eval(f, b.node, a.node);
}

}  // namespace

SpaceElement::SpaceElement(SpecPtr spec, std::vector<KernelTerm> terms)
    : spec_(std::move(spec)), terms_(std::move(terms)) {
  require_spec(spec_);
  for (const KernelTerm& t : terms_) {
    if (!is_finite(t.node) || !is_finite(t.coefficient)) {
      fail(ErrorCode::Validation, "kernel term: non-finite node or coefficient");
    }
    if (t.node.imag() < 0.0) {
      fail(ErrorCode::Validation,
           "kernel term: node must lie in the closed upper half-plane");
    }
  }
}

SpaceElement SpaceElement::zero(SpecPtr spec) {
  return SpaceElement(std::move(spec), {});
}

SpaceElement SpaceElement::kernel(SpecPtr spec, Complex node,
                                  Complex coefficient) {
  return SpaceElement(std::move(spec),
                      {KernelTerm{TermKind::Kernel, node, coefficient}});
}

Complex kernel_eval(const InnerFunctionSpec& f, Complex w, Complex z) {
  const Complex wbar = std::conj(w);
  if (w.imag() == 0.0 && std::abs(z - w) < kDiagonalSwitch) {
    // series of (i/2pi)(1 - g(z))/(z - w) around the diagonal, g = conj(F(w)) F
    const Complex c = std::conj(f.eval(w));
    const Complex g1 = c * f.derivative(w);
    const Complex g2 = c * f.second_derivative(w);
    return (g1 + 0.5 * g2 * (z - w)) / Complex{0.0, 2.0 * kPi};
  }
  const Complex den = z - wbar;
  if (std::abs(den) < kPoleGuard) {
    fail(ErrorCode::Pole, "kernel_eval: z coincides with conj(w)");
  }
  return kImagUnit / (2.0 * kPi) * (1.0 - std::conj(f.eval(w)) * f.eval(z)) /
         den;
}

double kernel_norm_sq(const InnerFunctionSpec& f, double x) {
  if (!std::isfinite(x)) {
    fail(ErrorCode::Validation, "kernel_norm_sq: non-finite argument");
  }
  const Complex v =
      std::conj(f.eval(x)) * f.derivative(x) / Complex{0.0, 2.0 * kPi};
  return v.real();
}

Complex conjugate_kernel_eval(const InnerFunctionSpec& f, Complex w,
                              Complex z) {
  if (std::abs(z - w) < kDiagonalSwitch) {
    return -kImagUnit / (2.0 * kPi) *
           (f.derivative(w) + 0.5 * f.second_derivative(w) * (z - w));
  }
  return -kImagUnit / (2.0 * kPi) * (f.eval(z) - f.eval(w)) / (z - w);
}

Complex evaluate(const SpaceElement& f, Complex z) {
  const InnerFunctionSpec& spec = require_spec(f.spec());
  Complex sum{0.0, 0.0};
  for (const KernelTerm& t : f.terms()) {
    const Complex v = t.kind == TermKind::Kernel
                          ? kernel_eval(spec, t.node, z)
                          : conjugate_kernel_eval(spec, t.node, z);
    sum += t.coefficient * v;
  }
  return sum;
}

Complex inner_product(const SpaceElement& f, const SpaceElement& g) {
  require_same_spec(f, g);
  const InnerFunctionSpec& spec = require_spec(f.spec());
  Complex sum{0.0, 0.0};
  for (const KernelTerm& a : f.terms()) {
    for (const KernelTerm& b : g.terms()) {
      sum += a.coefficient * std::conj(b.coefficient) * term_pair(spec, a, b);
    }
  }
  return sum;
}

double norm(const SpaceElement& f) {
  const double n2 = inner_product(f, f).real();
  return std::sqrt(std::max(0.0, n2));
}

SpaceElement conjugate(const SpaceElement& f) {
  std::vector<KernelTerm> terms;
  terms.reserve(f.terms().size());
  for (const KernelTerm& t : f.terms()) {
    const TermKind flipped = t.kind == TermKind::Kernel
                                 ? TermKind::ConjugateKernel
                                 : TermKind::Kernel;
    terms.push_back(KernelTerm{flipped, t.node, std::conj(t.coefficient)});
  }
  return SpaceElement(f.spec(), std::move(terms));
}

SpaceElement scale(const SpaceElement& f, Complex c) {
  std::vector<KernelTerm> terms = f.terms();
  for (KernelTerm& t : terms) t.coefficient *= c;
  return SpaceElement(f.spec(), std::move(terms));
}

DeficiencyPair deficiency_vectors(const SpecPtr& spec) {
  require_spec(spec);
  SpaceElement psi_minus =
      SpaceElement::kernel(spec, kImagUnit, kImagUnit * 2.0 * kPi);
  SpaceElement psi_plus = scale(conjugate(psi_minus), -1.0);
  return DeficiencyPair{std::move(psi_plus), std::move(psi_minus)};
}

}  // namespace mspace
