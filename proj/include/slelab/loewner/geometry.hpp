#pragma once

#include <cmath>
#include <string>

#include "slelab/common.hpp"

namespace slelab::loewner {

enum class GeometryKind { Chordal, Radial, Dipolar, Annular };

struct Geometry {
  GeometryKind kind = GeometryKind::Chordal;
  double p = 0.0;  // annular modulus
  int M = 40;      // annular lattice-sum truncation

  static Geometry chordal() { return {GeometryKind::Chordal}; }
  static Geometry radial() { return {GeometryKind::Radial}; }
  static Geometry dipolar() { return {GeometryKind::Dipolar}; }
  static Geometry annular(double p, int M = 40) {
    if (!(p > 0.0) || M < 1) throw DomainError("annular geometry needs p > 0 and M >= 1");
    return {GeometryKind::Annular, p, M};
  }
};

inline std::string to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::Chordal: return "chordal";
    case GeometryKind::Radial: return "radial";
    case GeometryKind::Dipolar: return "dipolar";
    case GeometryKind::Annular: return "annular";
  }
  return "?";
}

/// Vector fields of the uniformizing maps g_t with the driver frozen at xi.
/// Each returns the velocity and its derivative in g (for f' transport).
namespace field {

struct Value {
  cplx v;
  cplx dv;
};

/// Radial SLE in the upper half plane; fixed point i, tip image tan(xi).
inline Value radial(cplx g, double xi) {
  const double T = std::tan(xi);
  const cplx num = 2.0 * (1.0 + g * g) * (1.0 + g * T);
  const cplx dnum = 2.0 * (2.0 * g * (1.0 + g * T) + T * (1.0 + g * g));
  const cplx den = g - T;
  return {num / den, (dnum * den - num) / (den * den)};
}

/// Dipolar SLE; fixed points +-1, tip image tanh(xi).
inline Value dipolar(cplx g, double xi) {
  const double T = std::tanh(xi);
  const cplx num = 2.0 * (1.0 - g * g) * (1.0 - g * T);
  const cplx dnum = 2.0 * (-2.0 * g * (1.0 - g * T) - T * (1.0 - g * g));
  const cplx den = g - T;
  return {num / den, (dnum * den - num) / (den * den)};
}

/// Radial SLE in the unit disk, time normalised as in the annular equation.
inline Value disk_radial(cplx g, double xi) {
  const cplx e = std::polar(1.0, xi);
  const cplx ge = g * e;
  const cplx den = 1.0 - ge;
  return {g * (1.0 + ge) / den, (1.0 + 2.0 * ge - ge * ge) / (den * den)};
}

/// Annular SLE at current modulus q = p - t, lattice sums truncated at M.
inline Value annular(cplx g, double xi, double q, int M) {
  const cplx e = std::polar(1.0, xi);
  const cplx ge = g * e;
  Value out = disk_radial(g, xi);
  for (int m = 1; m <= M; ++m) {
    const double big = std::exp(2.0 * m * q);
    const double small = 1.0 / big;
    const cplx d1 = big - ge;
    out.v += 2.0 * g * ge / d1;
    out.dv += 2.0 * e * g * (2.0 * big - ge) / (d1 * d1);
    const cplx d2 = small - ge;
    out.v += 2.0 * g * small / d2;
    out.dv += 2.0 * small * small / (d2 * d2);
  }
  return out;
}

}  // namespace field

/// Mobius recentring: f = h_xi^{-1}(g) puts the tip image at the canonical point.
inline cplx radial_recentre(cplx g, double xi) {
  const double T = std::tan(xi);
  return (g - T) / (1.0 + g * T);
}
inline cplx radial_recentre_derivative(cplx g, double xi) {
  const double T = std::tan(xi);
  const cplx d = 1.0 + g * T;
  return (1.0 + T * T) / (d * d);
}
inline cplx dipolar_recentre(cplx g, double xi) {
  const double T = std::tanh(xi);
  return (g - T) / (1.0 - g * T);
}
inline cplx dipolar_recentre_derivative(cplx g, double xi) {
  const double T = std::tanh(xi);
  const cplx d = 1.0 - g * T;
  return (1.0 - T * T) / (d * d);
}

/// Half-plane to disk: i goes to 0 and the radial emergence point 0 goes to 1.
inline cplx half_plane_to_disk(cplx z) { return -(z - cplx(0.0, 1.0)) / (z + cplx(0.0, 1.0)); }

}  // namespace slelab::loewner
