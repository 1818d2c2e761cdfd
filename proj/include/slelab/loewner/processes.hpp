#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/evolve.hpp"
#include "slelab/loewner/trace.hpp"

namespace slelab::loewner {

struct RadiusSample {
  double t;
  double rho;    // conformal radius of the hull seen from z0
  double alpha;  // continuous argument of f/conj(f), in (0, 2 pi) while alive
};

/// rho_t = 2 Im f_t(z0) / |f_t'(z0)| along a chordal path, stopped at swallowing.
inline std::vector<RadiusSample> conformal_radius_process(const Driver& d, cplx z0,
                                                          const EvolveOptions& opt = {}) {
  if (!(z0.imag() > 0.0)) throw DomainError("conformal_radius_process: z0 must be in the upper half plane");
  const PointEvolution ev = evolve_point(Geometry::chordal(), d, z0, opt);
  std::vector<RadiusSample> out;
  double alpha = 0.0;
  for (std::size_t k = 0; k < ev.w.size(); ++k) {
    const cplx f = ev.w[k];
    if (ev.swallow_time && k + 1 == ev.w.size() && ev.times[k] >= *ev.swallow_time) break;
    const double a = 2.0 * std::arg(f);  // in (0, 2 pi) for f in the upper half plane
    if (k == 0) {
      alpha = a;
    } else {
      double delta = a - std::fmod(alpha, 2.0 * pi);
      delta -= 2.0 * pi * std::round(delta / (2.0 * pi));
      alpha += delta;
    }
    out.push_back({ev.times[k], 2.0 * f.imag() / std::abs(ev.dw[k]), alpha});
  }
  return out;
}

/// Expansion f_t(z) = z + sum_{m<=-1} f_m z^{m+1} at infinity, through f_{-M}.
struct CoefficientPath {
  std::vector<double> times;
  std::map<int, std::vector<double>> coeffs;
  int M = 0;
};

namespace detail {

/// Applies the exact slit flow to F(x) = 1 + a_1 x + ... + a_M x^M, where f = F(x)/x, x = 1/z.
inline void series_slit(std::vector<double>& a, double h) {
  const std::size_t M = a.size() - 1;
  // Q = F^2 + 4 h x^2, then F <- sqrt(Q) with leading coefficient 1.
  std::vector<double> q(M + 1, 0.0);
  for (std::size_t i = 0; i <= M; ++i)
    for (std::size_t j = 0; i + j <= M; ++j) q[i + j] += a[i] * a[j];
  if (M >= 2) q[2] += 4.0 * h;
  std::vector<double> s(M + 1, 0.0);
  s[0] = 1.0;
  for (std::size_t n = 1; n <= M; ++n) {
    double acc = q[n];
    for (std::size_t j = 1; j < n; ++j) acc -= s[j] * s[n - j];
    s[n] = 0.5 * acc;
  }
  a.swap(s);
}

}  // namespace detail

inline CoefficientPath coefficient_path(const Driver& d, int M) {
  if (M < 2) throw DomainError("coefficient_path: M must be at least 2");
  CoefficientPath cp;
  cp.M = M;
  std::vector<double> a(M + 1, 0.0);
  a[0] = 1.0;
  a[1] = -d.values[0];
  auto record = [&](double t) {
    cp.times.push_back(t);
    for (int m = 1; m <= M; ++m) cp.coeffs[-m].push_back(a[m]);
  };
  record(0.0);
  const double h = 0.5 * d.dt;
  for (std::size_t k = 0; k < d.steps(); ++k) {
    detail::series_slit(a, h);
    a[1] -= d.values[k + 1] - d.values[k];
    detail::series_slit(a, h);
    record(d.time(k + 1));
  }
  return cp;
}

enum class AnnularBoundary { Outer, Inner };

struct BoundaryMotionOptions {
  double drift_bound = 1e8;
};

/// Drift of the angle of a boundary point at modulus q = p - t.
inline double annular_boundary_drift(AnnularBoundary which, double angle, double q, int M) {
  const double s = std::sin(angle), c = std::cos(angle);
  double drift = 0.0;
  if (which == AnnularBoundary::Outer) {
    drift = c == 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::tan(0.5 * angle);
    for (int m = 1; m <= M; ++m) drift += 2.0 * s / (std::cosh(2.0 * m * q) - c);
  } else {
    for (int m = 0; m < M; ++m) drift += 2.0 * s / (std::cosh((2.0 * m + 1.0) * q) - c);
  }
  return drift;
}

/// Heun (trapezoidal drift) scheme consuming the driver increments.
inline std::vector<std::pair<double, double>> annular_boundary_motion(AnnularBoundary which, double p,
                                                                      const Driver& d, double angle0, int M,
                                                                      const BoundaryMotionOptions& opt = {}) {
  if (!(p > 0.0) || M < 1) throw DomainError("annular_boundary_motion: need p > 0 and M >= 1");
  if (d.horizon() >= p) throw AnnularTimeExceeded("annular horizon must stay below p");
  auto drift = [&](double a, double t) {
    const double v = annular_boundary_drift(which, a, p - t, M);
    if (!std::isfinite(v) || std::abs(v) > opt.drift_bound)
      throw SingularDrift("boundary drift exceeded its bound");
    return v;
  };
  std::vector<std::pair<double, double>> out{{0.0, angle0}};
  double a = angle0;
  for (std::size_t k = 0; k < d.steps(); ++k) {
    const double t = d.time(k);
    const double dxi = d.values[k + 1] - d.values[k];
    const double b0 = drift(a, t);
    const double pred = a + dxi + b0 * d.dt;
    a += dxi + 0.5 * (b0 + drift(pred, t + d.dt)) * d.dt;
    out.emplace_back(d.time(k + 1), a);
  }
  return out;
}

/// Target sets for min_distance_to_set.
struct Segment {
  cplx a, b;
};
struct RealRay {
  double from;
  bool to_plus_infinity = true;
};
struct Arc {
  cplx center;
  double radius;
  double theta0, theta1;  // counterclockwise from theta0 to theta1
};
struct RealAxis {};
struct DipolarForbidden {};  // complement of (-1, 1) in the extended real line
using BoundarySet = std::variant<Segment, RealRay, Arc, RealAxis, DipolarForbidden>;

inline double distance(cplx z, const BoundarySet& set) {
  struct V {
    cplx z;
    double operator()(const Segment& s) const {
      const cplx d = s.b - s.a;
      const double L2 = std::norm(d);
      double u = L2 > 0 ? ((z - s.a) * std::conj(d)).real() / L2 : 0.0;
      u = std::clamp(u, 0.0, 1.0);
      return std::abs(z - (s.a + u * d));
    }
    double operator()(const RealRay& r) const {
      const bool inside = r.to_plus_infinity ? z.real() >= r.from : z.real() <= r.from;
      return inside ? std::abs(z.imag()) : std::abs(z - cplx(r.from, 0.0));
    }
    double operator()(const Arc& a) const {
      const cplx rel = z - a.center;
      double th = std::arg(rel);
      const double span = a.theta1 - a.theta0;
      double off = std::fmod(th - a.theta0, 2.0 * pi);
      if (off < 0) off += 2.0 * pi;
      if (off <= span) return std::abs(std::abs(rel) - a.radius);
      return std::min(std::abs(z - (a.center + std::polar(a.radius, a.theta0))),
                      std::abs(z - (a.center + std::polar(a.radius, a.theta1))));
    }
    double operator()(const RealAxis&) const { return std::abs(z.imag()); }
    double operator()(const DipolarForbidden&) const { return dipolar::distance_to_forbidden(z); }
  };
  return std::visit(V{z}, set);
}

/// Minimum distance from the sampled trace points to `set`.
inline double min_distance_to_set(const Trace& tr, const BoundarySet& set) {
  if (tr.points.empty()) throw DomainError("min_distance_to_set: empty trace");
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& z : tr.points) best = std::min(best, distance(z, set));
  return best;
}

}  // namespace slelab::loewner
