#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "mspace/inner_function.hpp"
#include "mspace/phase.hpp"

namespace testsupport {

using mspace::Complex;
using mspace::InnerFunctionSpec;
using mspace::SpecPtr;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline SpecPtr make_spec(Complex gamma, double sigma,
                         std::vector<Complex> zeros, bool tail = false,
                         std::string label = {}) {
  return std::make_shared<const InnerFunctionSpec>(
      gamma, sigma, std::move(zeros), tail, std::move(label));
}

// Mirrors of the bundled spec files, constructed programmatically so the
// unit tests do not depend on the filesystem.
inline SpecPtr exp1() { return make_spec({1, 0}, 1.0, {}, false, "exp1"); }

inline SpecPtr blaschke1() {
  return make_spec({1, 0}, 0.0, {{0.0, 1.0}}, false, "blaschke1");
}

inline SpecPtr mixed3() {
  return make_spec({1, 0}, 0.5, {{-1.0, 0.8}, {0.5, 1.2}, {2.0, 0.6}}, false,
                   "mixed3");
}

inline SpecPtr mixed8() {
  return make_spec({1, 0}, 1.0,
                   {{-4.0, 0.9},
                    {-2.5, 1.4},
                    {-1.0, 0.7},
                    {0.0, 1.1},
                    {1.2, 0.5},
                    {2.4, 1.3},
                    {3.6, 0.8},
                    {5.0, 1.0}},
                   false, "mixed8");
}

inline SpecPtr mixed20() {
  return make_spec({1, 0}, 0.5,
                   {{-11.5, 0.7}, {-10.2, 1.3}, {-9.0, 0.5}, {-7.7, 1.1},
                    {-6.4, 0.8},  {-5.1, 1.5},  {-3.9, 0.6}, {-2.6, 1.2},
                    {-1.3, 0.9},  {-0.1, 1.4},  {1.1, 0.5},  {2.3, 1.0},
                    {3.5, 0.7},   {4.8, 1.3},   {6.0, 0.6},  {7.2, 1.1},
                    {8.5, 0.8},   {9.7, 1.5},   {10.9, 0.9}, {12.1, 1.2}},
                   false, "mixed20");
}

inline SpecPtr paley_wiener() {
  return make_spec({1, 0}, kTwoPi, {}, false, "paley_wiener");
}

inline std::vector<SpecPtr> bundled_specs() {
  return {exp1(), blaschke1(), mixed3(), mixed8(), mixed20()};
}

inline std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> xs;
  xs.reserve(n);
  for (int i = 0; i < n; ++i) {
    xs.push_back(i == n - 1 ? hi : lo + i * (hi - lo) / (n - 1));
  }
  return xs;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Upper half-plane sample kept clear of the spec's zeros (and hence of the
// reflected poles when conjugated).
inline Complex random_upper(std::mt19937_64& rng, const InnerFunctionSpec& f,
                            double xmax, double ymax) {
  for (int tries = 0; tries < 200; ++tries) {
    const Complex z{uniform(rng, -xmax, xmax), uniform(rng, 1e-3, ymax)};
    bool clear = true;
    for (const Complex& zn : f.zeros()) {
      if (std::abs(z - zn) < 0.05) clear = false;
    }
    if (clear) return z;
  }
  return Complex{0.0, 1.0};
}

// Independent spectrum oracle: counts (and optionally refines) the solutions
// of F(x) = e^{i beta} in [lo, hi] by a dense sign scan of
// h(x) = Im(e^{-i beta} F(x)) restricted to crossings with
// Re(e^{-i beta} F) > 0. Uses only direct evaluations of F plus the analytic
// bound tau' <= sigma + sum 2 / Im z_n for the grid resolution; no root
// finder or phase unwrapping is involved.
inline std::vector<double> scan_spectrum_oracle(const InnerFunctionSpec& f,
                                                double beta, double lo,
                                                double hi) {
  double slope_bound = f.sigma();
  for (const Complex& zn : f.zeros()) slope_bound += 2.0 / zn.imag();
  const double step = (kPi / 8.0) / slope_bound;
  const int n = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
  const Complex rot = std::polar(1.0, -beta);

  auto h = [&](double x) { return (rot * f.eval(x)).imag(); };
  auto c = [&](double x) { return (rot * f.eval(x)).real(); };

  std::vector<double> roots;
  double x_prev = lo;
  double h_prev = h(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = std::min(hi, lo + i * (hi - lo) / n);
    const double hx = h(x);
    if (h_prev * hx < 0.0) {
      if (c(0.5 * (x_prev + x)) > 0.0) {
        // bisection refine on h
        double a = x_prev, b = x, ha = h_prev;
        for (int it = 0; it < 80; ++it) {
          const double m = 0.5 * (a + b);
          const double hm = h(m);
          if ((ha <= 0.0) == (hm <= 0.0)) {
            a = m;
            ha = hm;
          } else {
            b = m;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
    }
    x_prev = x;
    h_prev = hx;
  }
  return roots;
}

}  // namespace testsupport
