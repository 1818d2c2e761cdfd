#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "slelab/estimators/core.hpp"
#include "slelab/loewner/dipolar.hpp"
#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/trace.hpp"

namespace slelab::estimators {

struct DipolarAvoidanceResult {
  std::vector<double> deltas;
  std::vector<Estimate> estimates;  // P[min distance from the trace to I <= delta before T]
  double smallest_distance = 0.0;   // over all runs and sampled points
  std::int64_t runs_touching = 0;   // runs whose sampled trace reached distance 0
};

/// Approach of dipolar traces to I, the complement of (-1, 1). Every `stride`-th grid
/// point of each trace is reconstructed exactly from the discrete driver.
inline DipolarAvoidanceResult mc_dipolar_avoidance(double kappa, const std::vector<double>& deltas,
                                                   const MCConfig& cfg, std::size_t stride = 4) {
  if (!(kappa > 0.0)) throw DomainError("mc_dipolar_avoidance: kappa must be positive");
  for (double d : deltas)
    if (!(d > 0.0 && d <= 1.0)) throw DomainError("mc_dipolar_avoidance: deltas must lie in (0, 1]");
  const auto n_steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
  const auto mins = run_samples<double>(cfg, [&](std::size_t, std::uint64_t seed) {
    const auto drv = loewner::sample_driver(kappa, cfg.dt, n_steps, seed);
    loewner::TraceOptions to;
    to.stride = stride;
    const auto tr = loewner::trace(loewner::Geometry::dipolar(), drv, to);
    double m = std::numeric_limits<double>::infinity();
    for (const cplx& z : tr.points) m = std::min(m, loewner::dipolar::distance_to_forbidden(z));
    return m;
  });
  DipolarAvoidanceResult r;
  r.deltas = deltas;
  r.smallest_distance = *std::min_element(mins.begin(), mins.end());
  for (double m : mins) r.runs_touching += m <= 0.0;
  for (double d : deltas) {
    std::vector<double> v;
    v.reserve(mins.size());
    for (double m : mins) v.push_back(m <= d ? 1.0 : 0.0);
    Estimate e = estimate_from(v);
    e.meta["estimand"] = "P[dist(trace, I) <= delta]";
    e.meta["stride"] = std::to_string(stride);
    r.estimates.push_back(e);
  }
  return r;
}

}  // namespace slelab::estimators
