#include "mspace/debranges.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mspace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kImagUnit{0.0, 1.0};

// Convergence exponent for the n-th factor (1-based): the truncated sum
// (p_n(z) + p_n^*(z))/2 = sum_{k=1..n} z^k Re(w^{-k}) / k has real
// coefficients, hence defines a star-symmetric entire factor.
Complex exponent_sum(Complex w, std::size_t n, Complex z) {
  Complex acc{0.0, 0.0};
  Complex zp{1.0, 0.0};
  const Complex invw = 1.0 / w;
  Complex invwp{1.0, 0.0};
  for (std::size_t k = 1; k <= n; ++k) {
    zp *= z;
    invwp *= invw;
    acc += zp * (invwp.real() / static_cast<double>(k));
  }
  return acc;
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre recurrence.
struct GaussLegendre16 {
  std::array<double, 16> nodes{};
  std::array<double, 16> weights{};
  GaussLegendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nodes[n - 1 - i] = x;
      weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre16& gauss_legendre16() {
  static const GaussLegendre16 table;
  return table;
}

}  // namespace

DeBrangesSpec build_e(const InnerFunctionSpec& f, bool convergence_exponents) {
  DeBrangesSpec e;
  e.sigma_e = f.sigma() / 2.0;
  e.zeros_conj.reserve(f.zeros().size());
  for (const Complex& zn : f.zeros()) e.zeros_conj.push_back(std::conj(zn));
  e.convergence_exponents = convergence_exponents;
  e.gamma_e = Complex{1.0, 0.0};

  // Calibration at x0 = 0: with gamma_e = 1 the ratio there is
  // r0 = E^*(0)/E(0); replacing gamma_e by e^{i theta} multiplies the ratio
  // by e^{-2 i theta}, so theta = -Arg(F(0)/r0)/2 matches F at x0 and, by
  // the product structure, everywhere on the axis.
  const Complex r0 = eval_e_star(e, 0.0) / eval_e(e, 0.0);
  const Complex target = f.eval(0.0) / r0;
  const double theta = -0.5 * std::arg(target);
  e.gamma_e = std::polar(1.0, theta);
  return e;
}

Complex eval_e(const DeBrangesSpec& e, Complex z) {
  if (!is_finite(z)) {
    fail(ErrorCode::Validation, "eval_e: non-finite argument");
  }
  if (std::abs(z) > 1e150) {
    fail(ErrorCode::Overflow, "eval_e: |z| beyond the overflow guard");
  }
  Complex value = e.gamma_e * std::exp(-kImagUnit * e.sigma_e * z);
  for (std::size_t n = 0; n < e.zeros_conj.size(); ++n) {
    const Complex w = e.zeros_conj[n];
    value *= 1.0 - z / w;
    if (e.convergence_exponents) {
      value *= std::exp(exponent_sum(w, n + 1, z));
    }
  }
  return value;
}

Complex eval_e_star(const DeBrangesSpec& e, Complex z) {
  return std::conj(eval_e(e, std::conj(z)));
}

double ratio_residual(const DeBrangesSpec& e, const InnerFunctionSpec& f,
                      double x) {
  const Complex ex = eval_e(e, x);
  return std::abs(eval_e_star(e, x) / ex - f.eval(x));
}

Complex he_kernel(const DeBrangesSpec& e, const InnerFunctionSpec& f, Complex w,
                  Complex z) {
  return eval_e(e, z) * std::conj(eval_e(e, w)) * kernel_eval(f, w, z);
}

WeightedInnerProduct l2_weight_inner_product(const DeBrangesSpec& e,
                                             const SpaceElement& f,
                                             const SpaceElement& g,
                                             double window_lo, double window_hi,
                                             int quad_points) {
  if (quad_points < 100) {
    fail(ErrorCode::InsufficientPoints,
         "l2_weight_inner_product: need at least 100 quadrature points");
  }
  if (!std::isfinite(window_lo) || !std::isfinite(window_hi) ||
      !(window_lo < window_hi)) {
    fail(ErrorCode::Validation, "l2_weight_inner_product: bad window");
  }
  if (f.terms().empty() || g.terms().empty()) {
    return WeightedInnerProduct{Complex{0.0, 0.0}, 0.0};
  }

  const auto& gl = gauss_legendre16();
  const int panels = std::max(1, quad_points / 16);
  const double h = (window_hi - window_lo) / panels;

  auto weighted_density = [&](double x) {
    const Complex ex = eval_e(e, x);
    const Complex fe = evaluate(f, x) * ex;
    const Complex ge = evaluate(g, x) * ex;
    return fe * std::conj(ge) / std::norm(ex);
  };

  Complex total{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    const double a = window_lo + p * h;
    const double mid = a + 0.5 * h;
    Complex acc{0.0, 0.0};
    for (int q = 0; q < 16; ++q) {
      acc += gl.weights[q] * weighted_density(mid + 0.5 * h * gl.nodes[q]);
    }
    total += 0.5 * h * acc;
  }

  // |f(x) conj(g(x))| ~ C / x^2 for large |x|; estimate C at the window ends.
  double tail = 0.0;
  const double clo = std::abs(weighted_density(window_lo)) * window_lo * window_lo;
  const double chi = std::abs(weighted_density(window_hi)) * window_hi * window_hi;
  if (std::abs(window_lo) > 1.0) tail += clo / std::abs(window_lo);
  if (std::abs(window_hi) > 1.0) tail += chi / std::abs(window_hi);

  return WeightedInnerProduct{total, tail};
}

}  // namespace mspace
