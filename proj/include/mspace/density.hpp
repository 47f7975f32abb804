#pragma once

#include "mspace/inner_function.hpp"

namespace mspace {

enum class DensityVerdict {
  DenselyDefined,
  NotDenselyDefined,
  DeclaredDenselyDefinedByTail,
};

const char* to_string(DensityVerdict v);

/// Dense-definedness report for multiplication by z in K^2_F. Finite zero
/// lists can never certify a divergent zero sum, so sigma = 0 without the
/// declared tail flag always yields NotDenselyDefined; the partial sum of
/// Im z_n is reported alongside.
struct DensityReport {
  double sigma = 0.0;
  double partial_im_sum = 0.0;
  bool tail_flag = false;
  DensityVerdict verdict = DensityVerdict::NotDenselyDefined;
};

DensityReport dense_defined_report(const InnerFunctionSpec& f);

/// Partial sum sum_n Im z_n / |lambda - z_n|^2. Divergence of the full sum
/// would exclude lambda from every extension's point spectrum; for
/// meromorphic specs the sum is finite at every real lambda.
double eigenvalue_admissibility_sum(const InnerFunctionSpec& f, double lambda);

/// Boundary angular-derivative indicator at a point zeta on the unit circle:
/// the finite sum sum_n (1 - |a_n|^2) / |zeta - a_n|^2 over the disk
/// pullbacks a_n = mu(z_n), flagged infinite at zeta = 1 when sigma > 0
/// (the exponential factor's point mass). A finite value means the angular
/// derivative exists at zeta. The flag is a distinguished value rather than
/// a floating-point infinity.
struct AngularDerivativeIndicator {
  double partial_sum = 0.0;
  bool flagged_infinite = false;
};

AngularDerivativeIndicator angular_derivative_indicator(
    const InnerFunctionSpec& f, Complex zeta_disk);

}  // namespace mspace
