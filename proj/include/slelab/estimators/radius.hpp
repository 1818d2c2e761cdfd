#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "slelab/estimators/core.hpp"
#include "slelab/estimators/race.hpp"
#include "slelab/loewner/chordal.hpp"

namespace slelab::estimators {

struct RadiusTailOptions {
  /// Stop once sin(arg f_t(z0)) drops below this: z0 is about to be swallowed (kappa > 4)
  /// or is being pushed to the boundary, and rho hardly moves afterwards.
  double sin_floor = 1e-6;
  std::int64_t max_steps = 200000000;
};

struct RadiusTailResult {
  std::vector<double> epsilons;
  std::vector<Estimate> estimates;  // P[rho(z0, gamma) <= eps]
  ExponentFit fit;                  // log P against log eps; slope -> 2 h_{0;1}
};

namespace detail {

struct RadiusRun {
  double rho;
  bool censored;
};

/// Final conformal radius of a chordal run seen from z0, with the same renormalised
/// Strang scheme as RealRace (the scale here is |f_t(z0) - xi_t|).
inline RadiusRun radius_run(cplx z0, double kappa, double dt, double horizon, double eps_min,
                            std::uint64_t seed, const RadiusTailOptions& opt) {
  double ell = std::abs(z0);
  const double ds = dt / (ell * ell);
  HalfKicks kick(seed, kappa, ds);
  cplx f = z0 / ell, df = 1.0;
  double t = 0.0;
  for (std::int64_t k = 0;; ++k) {
    const double rho = 2.0 * f.imag() * ell / std::abs(df);
    if (rho <= eps_min || f.imag() < opt.sin_floor * std::abs(f)) return {rho, false};
    if (t >= horizon || k >= opt.max_steps) return {rho, true};
    f -= kick();
    const cplx w = loewner::chordal::slit(f, ds);
    df *= f / w;
    f = w - kick();
    t += ds * ell * ell;
    double m = std::abs(f);
    while (m >= 2.0) {
      m *= 0.5;
      f *= 0.5;
      ell *= 2.0;
    }
    while (m < 1.0) {
      m *= 2.0;
      f *= 2.0;
      ell *= 0.5;
    }
  }
}

}  // namespace detail

/// Tail of the conformal radius rho(z0, gamma) at the given epsilons.
inline RadiusTailResult mc_radius_tail(cplx z0, double kappa, const std::vector<double>& epsilons,
                                       const MCConfig& cfg, const RadiusTailOptions& opt = {}) {
  if (!(z0.imag() > 0.0)) throw DomainError("mc_radius_tail: z0 must be in the upper half plane");
  if (!(kappa > 0.0 && kappa < 8.0)) throw DomainError("mc_radius_tail: kappa must lie in (0, 8)");
  if (epsilons.empty()) throw DomainError("mc_radius_tail: no epsilons");
  double eps_min = epsilons.front();
  for (double e : epsilons) {
    if (!(e > 0.0 && e < 2.0 * z0.imag())) throw DomainError("mc_radius_tail: epsilons must lie in (0, 2 Im z0)");
    eps_min = std::min(eps_min, e);
  }
  const auto runs = run_samples<detail::RadiusRun>(cfg, [&](std::size_t, std::uint64_t seed) {
    return detail::radius_run(z0, kappa, cfg.dt, cfg.horizon, eps_min, seed, opt);
  });
  RadiusTailResult r;
  r.epsilons = epsilons;
  for (double e : epsilons) {
    std::vector<double> v;
    v.reserve(runs.size());
    for (const auto& run : runs)
      v.push_back(run.rho <= e ? 1.0 : (run.censored ? detail::censored : 0.0));
    r.estimates.push_back(detail::censored_estimate(v, "P[rho <= eps]"));
  }
  r.fit = try_fit_estimates(epsilons, r.estimates);
  return r;
}

}  // namespace slelab::estimators
