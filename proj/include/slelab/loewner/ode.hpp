#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include <boost/numeric/odeint.hpp>

#include "slelab/common.hpp"

namespace slelab::loewner::detail {

/// (g, g') packed as four reals for the odeint steppers.
using State = std::array<double, 4>;

inline cplx g_of(const State& s) { return {s[0], s[1]}; }
inline cplx dg_of(const State& s) { return {s[2], s[3]}; }
inline State pack(cplx g, cplx dg) { return {g.real(), g.imag(), dg.real(), dg.imag()}; }

inline bool finite(const State& s) {
  for (double v : s)
    if (!std::isfinite(v)) return false;
  return true;
}

struct Tolerance {
  double atol = 1e-13;
  double rtol = 1e-12;
  std::size_t max_steps = 200000;
};

/// Adaptive Dormand-Prince over [t0, t1] for a complex field V(g, t) with derivative transport.
/// Field signature: field::Value(cplx g, double t). `stop(g)` ends integration early; returns
/// true when stopped.
template <class Field, class Stop>
bool integrate(Field&& fld, State& x, double t0, double t1, double& h, const Tolerance& tol,
               Stop&& stop) {
  namespace ode = boost::numeric::odeint;
  auto rhs = [&](const State& s, State& ds, double t) {
    const auto val = fld(g_of(s), t);
    const cplx dd = val.dv * dg_of(s);
    ds = {val.v.real(), val.v.imag(), dd.real(), dd.imag()};
  };
  auto stepper = ode::make_controlled(tol.atol, tol.rtol, ode::runge_kutta_dopri5<State>());
  double t = t0;
  const double span = t1 - t0;
  if (span == 0.0) return false;
  const double dir = span > 0 ? 1.0 : -1.0;
  if (!(h > 0.0)) h = std::abs(span) * 0.1;
  std::size_t iter = 0;
  while (dir * (t1 - t) > 1e-15 * std::max(1.0, std::abs(t1))) {
    double step = dir * std::min(h, std::abs(t1 - t));
    const auto res = stepper.try_step(rhs, x, t, step);
    if (res == ode::success) {
      if (!finite(x)) throw NonFiniteState("integrator produced a non-finite state");
      if (stop(g_of(x))) return true;
    }
    h = std::abs(step);
    if (!(h > 1e-300)) throw NonFiniteState("step size collapsed");
    if (++iter > tol.max_steps) throw NonFiniteState("adaptive integrator exceeded its step budget");
  }
  return false;
}

}  // namespace slelab::loewner::detail
