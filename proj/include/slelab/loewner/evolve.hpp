#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "slelab/loewner/chordal.hpp"
#include "slelab/loewner/dipolar.hpp"
#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/geometry.hpp"
#include "slelab/loewner/ode.hpp"

namespace slelab::loewner {

/// Trajectory of f_t(z0) and f_t'(z0) on the driver grid.
struct PointEvolution {
  cplx z0;
  std::vector<double> times;
  std::vector<cplx> w;
  std::vector<cplx> dw;
  std::optional<double> swallow_time;
  bool alive = true;
};

struct EvolveOptions {
  double eps_swallow = 1e-6;
  detail::Tolerance tol{};
};

// Every grid interval [t_k, t_{k+1}] is split in two halves: the driver is frozen at
// xi_k on the first and at xi_{k+1} on the second (symmetric, grid aligned).

namespace detail {

inline PointEvolution evolve_chordal(const Driver& d, cplx z0, const EvolveOptions& opt) {
  PointEvolution out{z0, {}, {}, {}, std::nullopt, true};
  const bool real = z0.imag() == 0.0;
  cplx f = z0 - d.values[0];
  cplx df = 1.0;
  out.times.push_back(0.0);
  out.w.push_back(f);
  out.dw.push_back(df);
  const double h = 0.5 * d.dt;
  auto half_slit = [&](cplx& fv, cplx& dfv) {
    const cplx nf = chordal::slit(fv, h);
    dfv *= fv / nf;
    fv = nf;
  };
  for (std::size_t k = 0; k < d.steps(); ++k) {
    half_slit(f, df);
    const cplx before = f;
    f -= d.values[k + 1] - d.values[k];
    if (real && before.real() * f.real() <= 0.0) {
      out.swallow_time = d.time(k) + h;
      break;
    }
    half_slit(f, df);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()) || !std::isfinite(df.real()))
      throw NonFiniteState("chordal evolution produced a non-finite state");
    const bool hit = std::abs(f) < opt.eps_swallow || (!real && f.imag() <= 0.0);
    out.times.push_back(d.time(k + 1));
    out.w.push_back(f);
    out.dw.push_back(df);
    if (hit) {
      out.swallow_time = d.time(k + 1);
      break;
    }
  }
  out.alive = !out.swallow_time.has_value();
  return out;
}

/// Radial (half plane), dipolar and annular (disk) share this adaptive path.
template <class FieldAt, class Recentre>
PointEvolution evolve_adaptive(const Driver& d, cplx z0, const EvolveOptions& opt, cplx tip,
                               FieldAt&& field_at, Recentre&& recentre) {
  PointEvolution out{z0, {}, {}, {}, std::nullopt, true};
  State x = pack(z0, 1.0);
  auto record = [&](double t, double xi) {
    const auto [f, df] = recentre(g_of(x), dg_of(x), xi);
    out.times.push_back(t);
    out.w.push_back(f);
    out.dw.push_back(df);
    return f;
  };
  record(0.0, d.values[0]);
  double hstep = 0.0;
  for (std::size_t k = 0; k < d.steps() && out.alive; ++k) {
    for (int half = 0; half < 2; ++half) {
      const double xi = d.values[k + half];
      const double ta = d.time(k) + 0.5 * d.dt * half;
      auto stop = [&](cplx g) { return std::abs(recentre(g, cplx(1.0), xi).first - tip) < opt.eps_swallow; };
      const bool hit = integrate([&](cplx g, double t) { return field_at(g, xi, t); }, x, ta,
                                 ta + 0.5 * d.dt, hstep, opt.tol, stop);
      if (hit) {
        out.swallow_time = ta + 0.5 * d.dt;
        out.alive = false;
        break;
      }
    }
    if (out.alive) record(d.time(k + 1), d.values[k + 1]);
  }
  return out;
}

}  // namespace detail

/// Integrates f_t(z0) with its derivative. Radial and dipolar points live in the upper
/// half plane; annular points live in the annulus e^{-p} < |z| < 1.
inline PointEvolution evolve_point(const Geometry& geo, const Driver& d, cplx z0,
                                   const EvolveOptions& opt = {}) {
  if (d.values.empty()) throw DomainError("evolve_point: empty driver");
  switch (geo.kind) {
    case GeometryKind::Chordal:
      return detail::evolve_chordal(d, z0, opt);
    case GeometryKind::Radial:
      return detail::evolve_adaptive(
          d, z0, opt, 0.0, [](cplx g, double xi, double) { return field::radial(g, xi); },
          [](cplx g, cplx dg, double xi) {
            return std::pair{radial_recentre(g, xi), radial_recentre_derivative(g, xi) * dg};
          });
    case GeometryKind::Dipolar:
      return detail::evolve_adaptive(
          d, z0, opt, 0.0, [](cplx g, double xi, double) { return field::dipolar(g, xi); },
          [](cplx g, cplx dg, double xi) {
            return std::pair{dipolar_recentre(g, xi), dipolar_recentre_derivative(g, xi) * dg};
          });
    case GeometryKind::Annular: {
      if (d.horizon() >= geo.p) throw AnnularTimeExceeded("annular horizon must stay below p");
      const double p = geo.p;
      const int M = geo.M;
      return detail::evolve_adaptive(
          d, z0, opt, 1.0, [p, M](cplx g, double xi, double t) { return field::annular(g, xi, p - t, M); },
          [](cplx g, cplx dg, double xi) {
            const cplx e = std::polar(1.0, xi);
            return std::pair{g * e, dg * e};
          });
    }
  }
  throw DomainError("evolve_point: unknown geometry");
}

}  // namespace slelab::loewner
