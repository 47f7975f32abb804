#include "mspace/inner_function.hpp"

#include <cmath>

namespace mspace {

namespace {

constexpr Complex kImagUnit{0.0, 1.0};
constexpr double kPoleGuard = 1e-300;

std::string indexed(const char* field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

}  // namespace

InnerFunctionSpec::InnerFunctionSpec(Complex gamma, double sigma,
                                     std::vector<Complex> zeros,
                                     bool tail_im_sum_diverges,
                                     std::string label)
    : gamma_(gamma),
      sigma_(sigma),
      zeros_(std::move(zeros)),
      tail_im_sum_diverges_(tail_im_sum_diverges),
      label_(std::move(label)) {
  if (!is_finite(gamma_)) {
    fail(ErrorCode::Validation, "gamma: non-finite value");
  }
  const double g = std::abs(gamma_);
  if (std::abs(g - 1.0) > 1e-12) {
    fail(ErrorCode::Validation, "gamma: |gamma| must be 1");
  }
  gamma_ /= g;
  if (!std::isfinite(sigma_) || sigma_ < 0.0) {
    fail(ErrorCode::Validation, "sigma: must be finite and >= 0");
  }
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (!is_finite(zeros_[i])) {
      fail(ErrorCode::Validation, indexed("zeros", i) + ": non-finite value");
    }
    if (!(zeros_[i].imag() > 0.0)) {
      fail(ErrorCode::Validation,
           indexed("zeros", i) + ": imaginary part must be > 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (zeros_[i] == zeros_[j]) {
        fail(ErrorCode::Validation,
             indexed("zeros", i) + ": duplicate of " + indexed("zeros", j));
      }
    }
  }
  if (sigma_ == 0.0 && zeros_.empty()) {
    fail(ErrorCode::Validation,
         "spec represents a unimodular constant (sigma = 0, no zeros); "
         "the associated model space is trivial");
  }
  value_at_i_ = eval(kImagUnit);
}

void InnerFunctionSpec::check_pole(Complex z, const char* where) const {
  if (!is_finite(z)) {
    fail(ErrorCode::Validation, std::string(where) + ": non-finite argument");
  }
  for (const Complex& zn : zeros_) {
    if (std::abs(z - std::conj(zn)) < kPoleGuard) {
      fail(ErrorCode::Pole, std::string(where) + ": argument hits a pole");
    }
  }
}

Complex InnerFunctionSpec::eval(Complex z) const {
  check_pole(z, "eval");
  Complex value = gamma_ * std::exp(kImagUnit * sigma_ * z);
  for (const Complex& zn : zeros_) {
    value *= (z - zn) / (z - std::conj(zn));
  }
  return value;
}

Complex InnerFunctionSpec::log_derivative(Complex z) const {
  Complex sum{0.0, sigma_};
  for (const Complex& zn : zeros_) {
    sum += 1.0 / (z - zn) - 1.0 / (z - std::conj(zn));
  }
  return sum;
}

Complex InnerFunctionSpec::derivative(Complex z) const {
  check_pole(z, "derivative");
  return eval(z) * log_derivative(z);
}

Complex InnerFunctionSpec::second_derivative(Complex z) const {
  check_pole(z, "second_derivative");
  const Complex l = log_derivative(z);
  Complex lprime{0.0, 0.0};
  for (const Complex& zn : zeros_) {
    const Complex a = z - zn;
    const Complex b = z - std::conj(zn);
    lprime += 1.0 / (b * b) - 1.0 / (a * a);
  }
  return eval(z) * (l * l + lprime);
}

Complex InnerFunctionSpec::characteristic(Complex z) const {
  return disk_automorphism(eval(z), value_at_i_);
}

Complex InnerFunctionSpec::disk_characteristic(Complex v) const {
  if (!is_finite(v)) {
    fail(ErrorCode::Validation, "disk_characteristic: non-finite argument");
  }
  if (std::abs(v) > 1.0 + 1e-12) {
    fail(ErrorCode::OutOfDisk, "disk_characteristic: |v| > 1");
  }
  return disk_automorphism(eval(to_halfplane(v)), value_at_i_);
}

bool InnerFunctionSpec::operator==(const InnerFunctionSpec& other) const {
  return gamma_ == other.gamma_ && sigma_ == other.sigma_ &&
         zeros_ == other.zeros_;
}

}  // namespace mspace
