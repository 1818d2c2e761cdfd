#pragma once

#include <cmath>
#include <vector>

#include "slelab/loewner/chordal.hpp"
#include "slelab/loewner/dipolar.hpp"
#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/geometry.hpp"
#include "slelab/loewner/ode.hpp"

namespace slelab::loewner {

/// Sampled curve gamma(t). Chordal and dipolar points are in the upper half plane,
/// radial points in the unit disk (emergence point 1, target 0).
struct Trace {
  std::vector<double> times;
  std::vector<cplx> points;
  Geometry geometry;
};

struct TraceOptions {
  double eps_tip = -1.0;  // radial start offset; negative means 1e-3 * sqrt(dt)
  std::size_t stride = 1;  // keep every stride-th grid time (the last one always)
  detail::Tolerance tol{1e-12, 1e-10, 200000};
};

namespace detail {

inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t stride) {
  std::vector<std::size_t> idx;
  if (stride == 0) stride = 1;
  for (std::size_t k = 0; k <= n; k += stride) idx.push_back(k);
  if (idx.back() != n) idx.push_back(n);
  return idx;
}

inline Trace trace_chordal(const Driver& d, const TraceOptions& opt) {
  Trace tr{{}, {}, Geometry::chordal()};
  const double h = 0.5 * d.dt;
  for (std::size_t k : sample_indices(d.steps(), opt.stride)) {
    // Undo the half-slits of steps k-1, ..., 0, starting from the tip xi_k.
    cplx z = 0.0;
    for (std::size_t j = k; j-- > 0;) {
      z = chordal::unslit(z, h);
      z += d.values[j + 1] - d.values[j];
      z = chordal::unslit(z, h);
    }
    tr.times.push_back(d.time(k));
    tr.points.push_back(z + d.values[0]);
  }
  return tr;
}

inline Trace trace_dipolar(const Driver& d, const TraceOptions& opt) {
  Trace tr{{}, {}, Geometry::dipolar()};
  const double e = std::exp(2.0 * d.dt);  // exp(4 h) for the half step h = dt / 2
  // Consecutive recentrings compose to a single hyperbolic rotation by the increment.
  std::vector<double> th(d.steps());
  for (std::size_t j = 0; j < d.steps(); ++j) th[j] = std::tanh(d.values[j + 1] - d.values[j]);
  for (std::size_t k : sample_indices(d.steps(), opt.stride)) {
    cplx z = 0.0;
    for (std::size_t j = k; j-- > 0;) {
      z = dipolar::unflow0_e(z, e);
      z = dipolar::mobius(z, th[j]);
      z = dipolar::unflow0_e(z, e);
    }
    tr.times.push_back(d.time(k));
    tr.points.push_back(dipolar::mobius(z, std::tanh(d.values[0])));
  }
  return tr;
}

inline Trace trace_radial(const Driver& d, const TraceOptions& opt) {
  Trace tr{{}, {}, Geometry::radial()};
  const double eps = opt.eps_tip > 0 ? opt.eps_tip : 1e-3 * std::sqrt(d.dt);
  for (std::size_t k : sample_indices(d.steps(), opt.stride)) {
    const double T = std::tan(d.values[k]);
    const cplx f(0.0, k == 0 ? 0.0 : eps);
    State x = pack((f + T) / (1.0 - f * T), 1.0);
    double hstep = 0.0;
    auto escape = [](cplx g) { return !(g.imag() > 0.0); };
    for (std::size_t j = k; j-- > 0;) {
      for (int half = 1; half >= 0; --half) {
        const double xi = d.values[j + half];
        const double tb = d.time(j) + 0.5 * d.dt * (half + 1);
        if (integrate([xi](cplx g, double) { return field::radial(g, xi); }, x, tb, tb - 0.5 * d.dt, hstep,
                      opt.tol, escape))
          throw TipEscape("radial trace left the half plane; decrease eps_tip");
      }
    }
    tr.times.push_back(d.time(k));
    tr.points.push_back(half_plane_to_disk(g_of(x)));
  }
  return tr;
}

}  // namespace detail

/// gamma(t_k) recovered by undoing the evolution from the tip image.
inline Trace trace(const Geometry& geo, const Driver& d, const TraceOptions& opt = {}) {
  if (d.values.empty()) throw DomainError("trace: empty driver");
  switch (geo.kind) {
    case GeometryKind::Chordal: return detail::trace_chordal(d, opt);
    case GeometryKind::Dipolar: return detail::trace_dipolar(d, opt);
    case GeometryKind::Radial: return detail::trace_radial(d, opt);
    case GeometryKind::Annular: break;
  }
  throw DomainError("trace: annular traces are not supported");
}

}  // namespace slelab::loewner
