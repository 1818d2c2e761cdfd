#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "slelab/common.hpp"

namespace slelab::loewner {

/// Driving function sampled on a uniform grid t_k = k dt.
struct Driver {
  double kappa = 0.0;
  double dt = 0.0;
  std::vector<double> values;
  std::uint64_t seed = 0;

  std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
  double horizon() const { return dt * static_cast<double>(steps()); }
  double time(std::size_t k) const { return dt * static_cast<double>(k); }
};

namespace detail {
inline void check_grid(double dt, std::size_t n_steps) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("driver: dt must be positive");
  if (n_steps == 0) throw DomainError("driver: n_steps must be positive");
}
}  // namespace detail

/// Brownian driver xi = sqrt(kappa) B with xi_0 = 0.
inline Driver sample_driver(double kappa, double dt, std::size_t n_steps, std::uint64_t seed) {
  detail::check_grid(dt, n_steps);
  if (!(kappa >= 0.0)) throw DomainError("driver: kappa must be nonnegative");
  Driver d{kappa, dt, std::vector<double>(n_steps + 1, 0.0), seed};
  std::mt19937_64 rng(mix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double sd = std::sqrt(kappa * dt);
  for (std::size_t k = 0; k < n_steps; ++k) d.values[k + 1] = d.values[k] + sd * gauss(rng);
  return d;
}

/// Deterministic forcing; every entry, including the first, equals `value`.
inline Driver constant_driver(double value, double dt, std::size_t n_steps) {
  detail::check_grid(dt, n_steps);
  return Driver{0.0, dt, std::vector<double>(n_steps + 1, value), 0};
}

/// Wraps an explicit path, e.g. a rescaled copy of a sampled one.
inline Driver path_driver(double dt, std::vector<double> values, double kappa = 0.0) {
  if (values.empty()) throw DomainError("driver: empty path");
  detail::check_grid(dt, values.size() > 1 ? values.size() - 1 : 1);
  return Driver{kappa, dt, std::move(values), 0};
}

}  // namespace slelab::loewner
