#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "slelab/analytic/cft.hpp"
#include "slelab/analytic/probabilities.hpp"
#include "slelab/estimators/core.hpp"
#include "slelab/estimators/race.hpp"

namespace slelab::estimators {

namespace detail {

inline bool contains(const std::vector<int>& v, int i) { return std::find(v.begin(), v.end(), i) != v.end(); }

/// 1 if x (index 0) is swallowed strictly before X (index 1), 0 otherwise, NaN if censored.
inline double touch_run(double x, double X, double kappa, double dt, double horizon, std::uint64_t seed,
                        const RaceOptions& opt) {
  RealRace race({x, X}, kappa, dt, horizon, seed, opt);
  for (;;) {
    const auto e = race.next();
    switch (e.kind) {
      case RealRace::Kind::Swallow:
        return contains(e.points, 1) ? 0.0 : 1.0;
      case RealRace::Kind::Merge:
        return 0.0;
      case RealRace::Kind::Exhausted:
        return 0.0;
      case RealRace::Kind::Censored:
        return censored;
    }
  }
}

}  // namespace detail

/// P1([x, X]) = P[tau_x < tau_X] for 0 < x < X.
inline Estimate mc_touch_interval(double x, double X, double kappa, const MCConfig& cfg,
                                  const RaceOptions& opt = {}) {
  if (!(x > 0.0 && X > x)) throw DomainError("mc_touch_interval: need 0 < x < X");
  if (!(kappa > 0.0)) throw DomainError("mc_touch_interval: kappa must be positive");
  auto vals = run_samples<double>(cfg, [&](std::size_t, std::uint64_t seed) {
    return detail::touch_run(x, X, kappa, cfg.dt, cfg.horizon, seed, opt);
  });
  auto e = detail::censored_estimate(vals, "P[tau_x < tau_X]");
  e.meta["relative_dt"] = std::to_string(cfg.dt / (x * x));
  return e;
}

/// P[tau_a < tau_b] for a < 0 < b. As everywhere, dt is physical Loewner time, so the
/// step relative to the closer point is dt / min(|a|, b)^2 (reported as relative_dt).
inline Estimate mc_cardy(double a, double b, double kappa, const MCConfig& cfg, const RaceOptions& opt = {}) {
  if (!(a < 0.0 && b > 0.0)) throw DomainError("mc_cardy: need a < 0 < b");
  if (!(kappa > 4.0 && kappa < 8.0)) throw DomainError("mc_cardy: kappa must lie in (4, 8)");
  auto vals = run_samples<double>(cfg, [&](std::size_t, std::uint64_t seed) {
    RealRace race({a, b}, kappa, cfg.dt, cfg.horizon, seed, opt);
    for (;;) {
      const auto e = race.next();
      if (e.kind == RealRace::Kind::Swallow) return detail::contains(e.points, 0) ? 1.0 : 0.0;
      if (e.kind == RealRace::Kind::Censored || e.kind == RealRace::Kind::Exhausted) return detail::censored;
    }
  });
  auto e = detail::censored_estimate(vals, "P[tau_a < tau_b]");
  e.meta["relative_dt"] = std::to_string(cfg.dt / std::pow(std::min(-a, b), 2));
  return e;
}

struct ZigzagOneResult {
  std::vector<double> dxs;
  std::vector<Estimate> estimates;
  ExponentFit fit;  // log P1 against log(dx / x)
};

/// P1([x, x + dx]) for each dx, with the exponent fitted against dx / x.
/// Each dx gets its own seed stream so the fitted points are independent.
inline ZigzagOneResult mc_zigzag_one(double x, const std::vector<double>& dxs, double kappa, const MCConfig& cfg,
                                     const RaceOptions& opt = {}) {
  if (!(kappa > 4.0 && kappa < 8.0)) throw DomainError("mc_zigzag_one: kappa must lie in (4, 8)");
  if (!(x > 0.0)) throw DomainError("mc_zigzag_one: x must be positive");
  ZigzagOneResult r;
  r.dxs = dxs;
  std::vector<double> rel;
  for (std::size_t i = 0; i < dxs.size(); ++i) {
    if (!(dxs[i] > 0.0)) throw DomainError("mc_zigzag_one: dx must be positive");
    MCConfig c = cfg;
    c.base_seed = split_seed(cfg.base_seed, 0x5a5a0000u + i);
    r.estimates.push_back(mc_touch_interval(x, x + dxs[i], kappa, c, opt));
    rel.push_back(dxs[i] / x);
  }
  r.fit = try_fit_estimates(rel, r.estimates);
  return r;
}

struct ZigzagTwoOptions {
  RaceOptions race;
  /// Second-interval length for the restart estimator, relative to |y|; 0 disables it.
  double restart_dy = 0.0;
  int restart_repeats = 1;
};

struct ZigzagTwoResult {
  Estimate direct;   // E[1{tau_x < tau_X, tau_x < tau_y} |f'(y) / f(y)|^{h13}]
  Estimate restart;  // two-stage estimate of the same quantity (if requested)
};

/// Q2(x, X; y) up to the fusion constant, for y < 0 < x < X.
///
/// The restart estimator continues from tau_x with a fresh driver: the image of
/// [y - dy, y] is the interval at distance |f(y)| of length |f'(y)| dy, and the touch
/// indicator for it, divided by the exact P1 of a unit-distance interval of length dy/|y|
/// scaled by |y|^{-h13}, estimates the same expectation as dy -> 0.
inline ZigzagTwoResult mc_zigzag_two(double x, double X, double y, double kappa, const MCConfig& cfg,
                                     const ZigzagTwoOptions& opt = {}) {
  if (!(y < 0.0 && x > 0.0 && X > x)) throw DomainError("mc_zigzag_two: need y < 0 < x < X");
  if (!(kappa > 4.0 && kappa < 8.0)) throw DomainError("mc_zigzag_two: kappa must lie in (4, 8)");
  const double h13 = analytic::cft_params(kappa).h13();
  const bool restart = opt.restart_dy > 0.0;
  double p1_ref = 0.0;
  if (restart) p1_ref = 1.0 - analytic::same_swallow_probability(1.0, 1.0 + opt.restart_dy, kappa);

  struct Run {
    double direct = 0.0, restart = 0.0;
  };
  auto runs = run_samples<Run>(cfg, [&](std::size_t, std::uint64_t seed) {
    RealRace race({x, X, y}, kappa, cfg.dt, cfg.horizon, seed, opt.race);
    Run r;
    for (;;) {
      const auto e = race.next();
      if (e.kind == RealRace::Kind::Censored) return Run{detail::censored, detail::censored};
      if (e.kind == RealRace::Kind::Merge) continue;
      if (e.kind == RealRace::Kind::Exhausted) return r;
      // Swallow: decisive as soon as x or y is involved.
      if (detail::contains(e.points, 2)) return r;
      if (!detail::contains(e.points, 0)) continue;
      if (detail::contains(e.points, 1)) return r;
      break;
    }
    const double fy = std::abs(race.value(2)), dfy = std::abs(race.derivative(2));
    r.direct = std::pow(dfy / fy, h13);
    if (restart) {
      const double dy = opt.restart_dy * std::abs(y);
      double hits = 0.0;
      for (int k = 0; k < opt.restart_repeats; ++k) {
        const double v = detail::touch_run(fy, fy + dfy * dy, kappa, cfg.dt * (fy * fy) / (x * x), cfg.horizon,
                                           split_seed(seed, 1 + k), opt.race);
        if (std::isnan(v)) return Run{r.direct, detail::censored};
        hits += v;
      }
      r.restart = hits / opt.restart_repeats / p1_ref * std::pow(std::abs(y), -h13);
    }
    return r;
  });
  std::vector<double> d, s;
  for (const auto& r : runs) {
    d.push_back(r.direct);
    s.push_back(r.restart);
  }
  ZigzagTwoResult out{detail::censored_estimate(d, "Q2 direct"), {}};
  if (restart) out.restart = detail::censored_estimate(s, "Q2 restart");
  return out;
}

}  // namespace slelab::estimators
