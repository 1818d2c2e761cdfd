#pragma once

#include <algorithm>
#include <cmath>

#include "slelab/common.hpp"

namespace slelab::loewner::dipolar {

/// Closed-form evolution with the driver frozen at 0 for a time d.
inline cplx flow0(cplx z, double d) {
  const double e = std::exp(-4.0 * d);
  const double x = z.real(), y = z.imag();
  return upper_sqrt(e * (x * x - y * y) + (1.0 - e), 2.0 * e * x * y, x);
}

/// Inverse of flow0, with e = exp(4 d) supplied by the caller.
inline cplx unflow0_e(cplx w, double e) {
  const double x = w.real(), y = w.imag();
  return upper_sqrt(e * (x * x - y * y - 1.0) + 1.0, 2.0 * e * x * y, x);
}

/// Inverse of flow0.
inline cplx unflow0(cplx w, double d) { return unflow0_e(w, std::exp(4.0 * d)); }

/// Hyperbolic rotation fixing +-1 and sending 0 to tanh(xi).
inline cplx mobius(cplx w, double tanh_xi) {
  // (w + t) / (1 + t w), written out to stay off the generic complex division.
  const double x = w.real(), y = w.imag(), t = tanh_xi;
  const double dr = 1.0 + t * x, di = t * y;
  const double nr = x + t, inv = 1.0 / (dr * dr + di * di);
  return {(nr * dr + y * di) * inv, (y * dr - nr * di) * inv};
}

/// Euclidean distance from z (closed upper half plane) to the complement of (-1, 1).
inline double distance_to_forbidden(cplx z) {
  if (std::abs(z.real()) >= 1.0) return std::abs(z.imag());
  return std::min(std::abs(z - 1.0), std::abs(z + 1.0));
}

}  // namespace slelab::loewner::dipolar
