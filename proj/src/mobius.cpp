#include "mspace/mobius.hpp"

#include <cmath>

namespace mspace {

namespace {

constexpr Complex kImagUnit{0.0, 1.0};

// Poles are rejected by a guard band rather than exact equality alone so that
// the subsequent division cannot overflow.
constexpr double kPoleGuard = 1e-300;

void require_finite(Complex z, const char* where) {
  if (!is_finite(z)) {
    fail(ErrorCode::Validation,
         std::string(where) + ": non-finite complex argument");
  }
}

}  // namespace

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex to_disk(Complex z) {
  require_finite(z, "to_disk");
  const Complex den = z + kImagUnit;
  if (std::abs(den) < kPoleGuard) {
    fail(ErrorCode::Pole, "to_disk: pole at z = -i");
  }
  return (z - kImagUnit) / den;
}

Complex to_halfplane(Complex w) {
  require_finite(w, "to_halfplane");
  const Complex den = 1.0 - w;
  if (std::abs(den) < kPoleGuard) {
    fail(ErrorCode::Pole, "to_halfplane: pole at w = 1");
  }
  return kImagUnit * (1.0 + w) / den;
}

Complex disk_automorphism(Complex v, Complex a) {
  require_finite(v, "disk_automorphism");
  require_finite(a, "disk_automorphism");
  if (std::abs(a) >= 1.0) {
    fail(ErrorCode::OutOfDisk, "disk_automorphism: parameter |a| >= 1");
  }
  return (v - a) / (1.0 - std::conj(a) * v);
}

}  // namespace mspace
