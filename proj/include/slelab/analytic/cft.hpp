#pragma once

#include <algorithm>
#include <cmath>

#include "slelab/common.hpp"

namespace slelab::analytic {

/// Central charge and Kac weights for a given kappa. Templated so the same
/// formulas serve doubles and exact rationals.
template <class T = double>
struct CFTParams {
  T kappa;
  T c;

  /// h(r, s) = ((r kappa - 4 s)^2 - (kappa - 4)^2) / (16 kappa).
  T h(const T& r, const T& s) const {
    const T a = r * kappa - T(4) * s;
    const T b = kappa - T(4);
    return (a * a - b * b) / (T(16) * kappa);
  }
  T h12() const { return h(T(1), T(2)); }
  T h13() const { return h(T(1), T(3)); }
  T h01() const { return h(T(0), T(1)); }
  T h0half() const { return h(T(0), T(1) / T(2)); }
};

template <class T>
T central_charge(const T& kappa) {
  return (T(6) - kappa) * (T(3) * kappa - T(8)) / (T(2) * kappa);
}

/// The other closed form, 1 - 6 (kappa - 4)^2 / (4 kappa).
template <class T>
T central_charge_alt(const T& kappa) {
  const T d = kappa - T(4);
  return T(1) - T(6) * d * d / (T(4) * kappa);
}

template <class T = double>
CFTParams<T> cft_params(const T& kappa) {
  if (!(kappa > T(0))) throw DomainError("cft_params: kappa must be positive");
  return CFTParams<T>{kappa, central_charge(kappa)};
}

/// |2 Im z0|^{-2 h_{0;1}} (sin(alpha_0 / 2))^{kappa/8 - 1}, z0 / conj(z0) = e^{i alpha_0}.
inline double one_point_function(cplx z0, double kappa) {
  if (!(z0.imag() > 0.0)) throw DomainError("one_point_function: z0 must be in the upper half plane");
  if (!(kappa < 8.0)) throw DomainError("one_point_function: kappa must be below 8");
  const double alpha = 2.0 * std::arg(z0);
  const double two_h01 = (8.0 - kappa) / 8.0;
  return std::pow(2.0 * z0.imag(), -two_h01) * std::pow(std::sin(0.5 * alpha), kappa / 8.0 - 1.0);
}

inline double fractal_dimension(double kappa) {
  if (!(kappa > 0.0)) throw DomainError("fractal_dimension: kappa must be positive");
  return std::min(2.0, 1.0 + kappa / 8.0);
}

}  // namespace slelab::analytic
