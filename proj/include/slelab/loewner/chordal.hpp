#pragma once

#include <cmath>

#include "slelab/common.hpp"

namespace slelab::loewner::chordal {

/// Exact flow of df/dt = 2/f for time h; real points keep their side.
inline double slit(double f, double h) {
  const double r = std::sqrt(f * f + 4.0 * h);
  return f < 0.0 ? -r : r;
}

/// Complex version; the branch is chosen in the closed upper half plane, and on the
/// real axis the sign follows Re f.
inline cplx slit(cplx f, double h) {
  const double x = f.real(), y = f.imag();
  return upper_sqrt(x * x - y * y + 4.0 * h, 2.0 * x * y, x);
}

/// Inverse of `slit`: preimage of w under the flow of duration h.
inline cplx unslit(cplx w, double h) {
  const double x = w.real(), y = w.imag();
  return upper_sqrt(x * x - y * y - 4.0 * h, 2.0 * x * y, x);
}

}  // namespace slelab::loewner::chordal
