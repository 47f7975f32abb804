#include "mspace/density.hpp"

#include <cmath>

#include "mspace/mobius.hpp"

namespace mspace {

const char* to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::DenselyDefined:
      return "DenselyDefined";
    case DensityVerdict::NotDenselyDefined:
      return "NotDenselyDefined";
    case DensityVerdict::DeclaredDenselyDefinedByTail:
      return "DeclaredDenselyDefinedByTail";
  }
  return "Unknown";
}

DensityReport dense_defined_report(const InnerFunctionSpec& f) {
  DensityReport report;
  report.sigma = f.sigma();
  report.tail_flag = f.tail_im_sum_diverges();
  for (const Complex& zn : f.zeros()) report.partial_im_sum += zn.imag();
  if (report.sigma > 0.0) {
    report.verdict = DensityVerdict::DenselyDefined;
  } else if (report.tail_flag) {
    report.verdict = DensityVerdict::DeclaredDenselyDefinedByTail;
  } else {
    report.verdict = DensityVerdict::NotDenselyDefined;
  }
  return report;
}

double eigenvalue_admissibility_sum(const InnerFunctionSpec& f, double lambda) {
  if (!std::isfinite(lambda)) {
    fail(ErrorCode::Validation,
         "eigenvalue_admissibility_sum: non-finite argument");
  }
  double sum = 0.0;
  for (const Complex& zn : f.zeros()) {
    sum += zn.imag() / std::norm(lambda - zn);
  }
  return sum;
}

AngularDerivativeIndicator angular_derivative_indicator(
    const InnerFunctionSpec& f, Complex zeta_disk) {
  if (!is_finite(zeta_disk)) {
    fail(ErrorCode::Validation,
         "angular_derivative_indicator: non-finite argument");
  }
  if (std::abs(std::abs(zeta_disk) - 1.0) > 1e-9) {
    fail(ErrorCode::OffCircle,
         "angular_derivative_indicator: zeta must lie on the unit circle");
  }
  AngularDerivativeIndicator indicator;
  for (const Complex& zn : f.zeros()) {
    const Complex an = to_disk(zn);
    indicator.partial_sum +=
        (1.0 - std::norm(an)) / std::norm(zeta_disk - an);
  }
  if (std::abs(zeta_disk - Complex{1.0, 0.0}) < 1e-12 && f.sigma() > 0.0) {
    indicator.flagged_infinite = true;
  }
  return indicator;
}

}  // namespace mspace
