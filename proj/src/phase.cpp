#include "mspace/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mspace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_window(double lo, double hi, const char* where) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    fail(ErrorCode::Validation,
         std::string(where) + ": window must be finite with lo < hi");
  }
}

void require_beta(double beta, const char* where) {
  if (!std::isfinite(beta) || beta < 0.0 || beta >= kTwoPi) {
    fail(ErrorCode::Validation,
         std::string(where) + ": beta must lie in [0, 2pi)");
  }
}

}  // namespace

double mod_two_pi(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double phase_derivative(const InnerFunctionSpec& f, double x) {
  if (!std::isfinite(x)) {
    fail(ErrorCode::Validation, "phase_derivative: non-finite argument");
  }
  double sum = f.sigma();
  for (const Complex& zn : f.zeros()) {
    const double dx = x - zn.real();
    const double b = zn.imag();
    sum += 2.0 * b / (dx * dx + b * b);
  }
  return sum;
}

double alpha_of_beta(const InnerFunctionSpec& f, double beta) {
  require_beta(beta, "alpha_of_beta");
  const Complex w = f.value_at_i();
  const Complex eib = std::polar(1.0, beta);
  const double a = std::arg((w + eib) / (1.0 + std::conj(w) * eib));
  return a < 0.0 ? a + kTwoPi : a;
}

double beta_of_alpha(const InnerFunctionSpec& f, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= kTwoPi) {
    fail(ErrorCode::Validation, "beta_of_alpha: alpha must lie in [0, 2pi)");
  }
  const Complex w = f.value_at_i();
  const Complex eia = std::polar(1.0, alpha);
  const double b = std::arg((eia - w) / (1.0 - std::conj(w) * eia));
  return b < 0.0 ? b + kTwoPi : b;
}

PhaseFunction::PhaseFunction(SpecPtr spec, double cache_lo, double cache_hi)
    : spec_(std::move(spec)) {
  if (!spec_) fail(ErrorCode::Validation, "PhaseFunction: null spec");
  require_window(cache_lo, cache_hi, "PhaseFunction");

  raw_at_zero_ = raw_phase(0.0);
  anchor_ = std::arg(spec_->eval(0.0));
  // std::arg can land on -pi through a signed zero; the anchor is pinned to
  // the principal branch (-pi, pi].
  if (anchor_ <= -kPi) anchor_ = kPi;

  // Monotone bracket grid: subdivide until each interval carries a phase
  // increase below pi/4, so no level of any extension can hide between
  // adjacent nodes.
  struct Segment {
    double a, ta, b, tb;
  };
  constexpr std::size_t kMaxCacheNodes = 1u << 20;
  constexpr double kMaxStep = kPi / 4.0;
  std::vector<Segment> pending;
  pending.push_back(
      Segment{cache_lo, value(cache_lo), cache_hi, value(cache_hi)});
  cache_.emplace_back(cache_lo, value(cache_lo));
  while (!pending.empty()) {
    const Segment s = pending.back();
    pending.pop_back();
    const bool small_enough = (s.tb - s.ta) < kMaxStep;
    const bool width_floor = (s.b - s.a) < 1e-9 * std::max(1.0, std::abs(s.a));
    if (small_enough || width_floor || cache_.size() >= kMaxCacheNodes) {
      cache_.emplace_back(s.b, s.tb);
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    const double tm = value(m);
    pending.push_back(Segment{m, tm, s.b, s.tb});
    pending.push_back(Segment{s.a, s.ta, m, tm});
  }
}

double PhaseFunction::raw_phase(double x) const {
  double t = spec_->sigma() * x;
  for (const Complex& zn : spec_->zeros()) {
    t -= 2.0 * std::atan2(zn.imag(), x - zn.real());
  }
  return t;
}

double PhaseFunction::value(double x) const {
  if (!std::isfinite(x)) {
    fail(ErrorCode::Validation, "phase value: non-finite argument");
  }
  return anchor_ + raw_phase(x) - raw_at_zero_;
}

double PhaseFunction::derivative(double x) const {
  return phase_derivative(*spec_, x);
}

double PhaseFunction::solve_level(double target, double lo, double hi) const {
  double a = lo;
  double b = hi;
  double fa = value(a) - target;
  double fb = value(b) - target;
  if (fa >= 0.0) return a;
  if (fb <= 0.0) return b;

  // Seed from the cache when it brackets the target.
  double x = 0.5 * (a + b);
  if (!cache_.empty() && cache_.front().second <= target &&
      target <= cache_.back().second) {
    auto it = std::lower_bound(
        cache_.begin(), cache_.end(), target,
        [](const std::pair<double, double>& p, double t) { return p.second < t; });
    if (it != cache_.begin() && it != cache_.end()) {
      const auto& hi_node = *it;
      const auto& lo_node = *(it - 1);
      if (lo_node.first >= a && hi_node.first <= b) {
        a = lo_node.first;
        b = hi_node.first;
        fa = lo_node.second - target;
        fb = hi_node.second - target;
        if (fa >= 0.0) return a;
        if (fb <= 0.0) return b;
        const double span = hi_node.second - lo_node.second;
        x = span > 0.0 ? lo_node.first + (target - lo_node.second) *
                                             (hi_node.first - lo_node.first) /
                                             span
                       : 0.5 * (a + b);
      }
    }
  }

  // Safeguarded Newton: fall back to bisection whenever the Newton step
  // leaves the current bracket.
  for (int iter = 0; iter < 60; ++iter) {
    const double fx = value(x) - target;
    if (fx > 0.0) {
      b = x;
    } else if (fx < 0.0) {
      a = x;
    } else {
      return x;
    }
    const double d = derivative(x);
    double next = x - fx / d;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) < 1e-13 * std::max(1.0, std::abs(next))) {
      return next;
    }
    x = next;
  }
  return x;
}

SpectrumReport PhaseFunction::spectrum(double beta, double window_lo,
                                       double window_hi, double tau_tol,
                                       double eigen_tol,
                                       std::size_t max_count) const {
  require_beta(beta, "spectrum");
  require_window(window_lo, window_hi, "spectrum");

  SpectrumReport report;
  report.beta = beta;
  report.window_lo = window_lo;
  report.window_hi = window_hi;

  const double tlo = value(window_lo);
  const double thi = value(window_hi);
  const double nmin_f = std::ceil((tlo - beta) / kTwoPi);
  const double nmax_f = std::floor((thi - beta) / kTwoPi);
  if (nmax_f < nmin_f) return report;
  if (nmax_f - nmin_f + 1.0 > static_cast<double>(max_count)) {
    fail(ErrorCode::WindowTooLarge,
         "spectrum: window would produce more than the configured cap of "
         "eigenvalues");
  }
  const long long nmin = static_cast<long long>(nmin_f);
  const long long nmax = static_cast<long long>(nmax_f);

  const Complex eib = std::polar(1.0, beta);
  for (long long n = nmin; n <= nmax; ++n) {
    const double target = beta + kTwoPi * static_cast<double>(n);
    double lambda = solve_level(target, window_lo, window_hi);
    lambda = std::clamp(lambda, window_lo, window_hi);
    const double residual = std::abs(value(lambda) - target);
    if (residual > tau_tol) {
      fail(ErrorCode::Internal, "spectrum: root residual above tolerance");
    }
    if (std::abs(spec_->eval(lambda) - eib) > eigen_tol) {
      fail(ErrorCode::Internal,
           "spectrum: eigenvalue equation F(lambda) = e^{i beta} violated");
    }
    report.eigenvalues.push_back(lambda);
    report.n_indices.push_back(n);
  }
  return report;
}

bool PhaseFunction::alternation_check(double beta1, double beta2,
                                      double window_lo,
                                      double window_hi) const {
  require_window(window_lo, window_hi, "alternation_check");
  const double b1 = mod_two_pi(beta1);
  const double b2 = mod_two_pi(beta2);
  const double gap = std::abs(b1 - b2);
  if (std::min(gap, kTwoPi - gap) < 1e-12) {
    fail(ErrorCode::Validation,
         "alternation_check: betas coincide mod 2pi");
  }
  const SpectrumReport s1 = spectrum(b1, window_lo, window_hi);
  const SpectrumReport s2 = spectrum(b2, window_lo, window_hi);
  if (s1.eigenvalues.empty() || s2.eigenvalues.empty()) {
    fail(ErrorCode::DegenerateWindow,
         "alternation_check: a spectrum is empty in the window");
  }

  std::size_t i = 0;
  std::size_t j = 0;
  int last_label = -1;
  while (i < s1.eigenvalues.size() || j < s2.eigenvalues.size()) {
    int label;
    if (j >= s2.eigenvalues.size() ||
        (i < s1.eigenvalues.size() &&
         s1.eigenvalues[i] < s2.eigenvalues[j])) {
      label = 0;
      ++i;
    } else {
      label = 1;
      ++j;
    }
    if (label == last_label) return false;
    last_label = label;
  }
  return true;
}

double PhaseFunction::coverage_check(double x, double residual_tol,
                                     double separation_tol) const {
  if (!std::isfinite(x)) {
    fail(ErrorCode::Validation, "coverage_check: non-finite argument");
  }
  const double beta = mod_two_pi(value(x));
  const double slope = derivative(x);
  const double halfwidth = kTwoPi / slope;
  const double lo = x - halfwidth;
  const double hi = x + halfwidth;

  const SpectrumReport own = spectrum(beta, lo, hi);
  double dist_own = std::numeric_limits<double>::infinity();
  for (double lambda : own.eigenvalues) {
    dist_own = std::min(dist_own, std::abs(lambda - x));
  }
  if (!(dist_own < residual_tol * std::max(1.0, std::abs(x)))) {
    fail(ErrorCode::CoverageViolation,
         "coverage_check: x missing from its own extension's spectrum");
  }

  double dist_other = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 7; ++j) {
    const double beta_other = mod_two_pi(beta + kTwoPi * j / 8.0);
    const SpectrumReport other = spectrum(beta_other, lo, hi);
    for (double lambda : other.eigenvalues) {
      dist_other = std::min(dist_other, std::abs(lambda - x));
    }
  }
  if (!(dist_other > separation_tol / slope)) {
    fail(ErrorCode::CoverageViolation,
         "coverage_check: x too close to another extension's spectrum");
  }
  return beta;
}

}  // namespace mspace
