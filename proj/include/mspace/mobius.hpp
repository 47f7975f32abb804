#pragma once

#include <complex>

#include "mspace/error.hpp"

namespace mspace {

using Complex = std::complex<double>;

bool is_finite(Complex z);

// Cayley-type map (z - i)/(z + i): upper half-plane -> open unit disk,
// real axis -> unit circle minus {1}. Pole at z = -i.
Complex to_disk(Complex z);

// Inverse map i(1 + w)/(1 - w). Pole at w = 1.
Complex to_halfplane(Complex w);

// (v - a)/(1 - conj(a) v) for |a| < 1. Preserves the closed disk, sends a to 0.
Complex disk_automorphism(Complex v, Complex a);

}  // namespace mspace
