#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "slelab/common.hpp"

namespace slelab::estimators {

/// `dt` is the step at the initial scale of the problem; the renormalised engines keep the
/// step proportional to the square of the current scale. `horizon` is in physical Loewner
/// time. The infinite-time estimands use a huge default horizon and report censored runs.
struct MCConfig {
  std::int64_t n_samples = 10000;
  double dt = 1e-4;
  double horizon = 1e16;
  std::uint64_t base_seed = 1;
  int workers = 1;

  void validate() const {
    if (n_samples < 1) throw DomainError("MCConfig: n_samples must be positive");
    if (!(dt > 0.0) || !(horizon > 0.0)) throw DomainError("MCConfig: dt and horizon must be positive");
    if (workers < 1) throw DomainError("MCConfig: workers must be positive");
    const double k = horizon / dt;
    if (std::abs(k - std::round(k)) > 1e-6 * std::max(1.0, k))
      throw DomainError("MCConfig: horizon must be an integer number of steps");
  }
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // named so because stderr is a libc macro
  std::int64_t n = 0;
  std::map<std::string, std::string> meta;
};

struct FitPoint {
  double log_x;
  double log_y;
  double weight;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::vector<FitPoint> points;
};

/// Pairwise (cascade) summation. The result depends only on the order of `v`.
inline double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

/// Sample mean and standard error sd / sqrt n, with the 1/n (maximum-likelihood) sd so that
/// indicator estimates satisfy std_error <= 1 / (2 sqrt n).
inline Estimate estimate_from(const std::vector<double>& values) {
  Estimate e;
  e.n = static_cast<std::int64_t>(values.size());
  if (values.empty()) return e;
  e.mean = pairwise_sum(values) / e.n;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - e.mean) * (values[i] - e.mean);
  e.std_error = std::sqrt(pairwise_sum(sq) / e.n / e.n);
  return e;
}

namespace detail {

inline constexpr double censored = std::numeric_limits<double>::quiet_NaN();

/// Estimate over uncensored runs (NaN marks a censored run); the censored count goes to meta.
inline Estimate censored_estimate(const std::vector<double>& values, const std::string& what) {
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values)
    if (!std::isnan(v)) kept.push_back(v);
  Estimate e = estimate_from(kept);
  e.meta["estimand"] = what;
  e.meta["censored"] = std::to_string(values.size() - kept.size());
  e.meta["censoring"] = "censored runs excluded from the mean";
  return e;
}

}  // namespace detail

/// Runs `sample(index, seed)` for every index in [0, n). Slot i always holds the
/// result of sample i, so aggregation does not depend on the worker count.
template <class R, class Fn>
std::vector<R> run_samples(const MCConfig& cfg, Fn&& sample) {
  cfg.validate();
  const std::size_t n = static_cast<std::size_t>(cfg.n_samples);
  std::vector<R> out(n);
  const int w = static_cast<int>(std::min<std::int64_t>(cfg.workers, cfg.n_samples));
  auto body = [&](int id, std::exception_ptr& err) {
    try {
      for (std::size_t i = id; i < n; i += w) out[i] = sample(i, split_seed(cfg.base_seed, i));
    } catch (...) {
      err = std::current_exception();
    }
  };
  std::vector<std::exception_ptr> errs(w);
  if (w == 1) {
    body(0, errs[0]);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < w; ++id) pool.emplace_back(body, id, std::ref(errs[id]));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Weighted least squares of log y on log x. Non-finite points are dropped.
inline ExponentFit fit_exponent(const std::vector<FitPoint>& pts) {
  ExponentFit fit;
  for (const auto& p : pts)
    if (std::isfinite(p.log_x) && std::isfinite(p.log_y) && std::isfinite(p.weight) && p.weight > 0.0)
      fit.points.push_back(p);
  if (fit.points.size() < 3) throw DomainError("fit_exponent: need at least 3 finite points");
  double sw = 0, sx = 0, sy = 0;
  for (const auto& p : fit.points) {
    sw += p.weight;
    sx += p.weight * p.log_x;
    sy += p.weight * p.log_y;
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0;
  for (const auto& p : fit.points) {
    sxx += p.weight * (p.log_x - mx) * (p.log_x - mx);
    sxy += p.weight * (p.log_x - mx) * (p.log_y - my);
  }
  if (!(sxx > 0.0)) throw DomainError("fit_exponent: abscissae are degenerate");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // Weights are inverse variances, so the slope variance is 1 / sxx.
  fit.slope_stderr = std::sqrt(1.0 / sxx);
  return fit;
}

/// Fit of log(mean) against log(x) weighted by (mean / std_error)^2.
inline ExponentFit fit_estimates(const std::vector<double>& xs, const std::vector<Estimate>& ys) {
  std::vector<FitPoint> pts;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    const double rel = ys[i].mean > 0.0 ? ys[i].std_error / ys[i].mean : 0.0;
    pts.push_back({std::log(xs[i]), std::log(ys[i].mean), rel > 0.0 ? 1.0 / (rel * rel) : 0.0});
  }
  return fit_exponent(pts);
}

/// As fit_estimates, but too few usable points (e.g. zero hits at small n) give NaN
/// coefficients instead of an error, so the per-point estimates are still reported.
inline ExponentFit try_fit_estimates(const std::vector<double>& xs, const std::vector<Estimate>& ys) {
  try {
    return fit_estimates(xs, ys);
  } catch (const DomainError&) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    return ExponentFit{nan, nan, nan, {}};
  }
}

}  // namespace slelab::estimators
