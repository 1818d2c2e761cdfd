#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "slelab/estimators/core.hpp"
#include "slelab/loewner/driver.hpp"
#include "slelab/loewner/processes.hpp"
#include "slelab/virasoro/coeff_polynomial.hpp"
#include "slelab/virasoro/scalar.hpp"

namespace slelab::estimators {

/// E[P(f_t)] for a polynomial in f_{-1}, ..., f_{-M}, evaluated along the exact
/// coefficient flow of the discretised driver. Times must lie on the dt grid.
inline std::vector<Estimate> mc_polynomial_martingale(const virasoro::CoeffPolynomial<virasoro::Rational>& P,
                                                      double kappa, const std::vector<double>& times,
                                                      const MCConfig& cfg) {
  if (!(kappa >= 0.0)) throw DomainError("mc_polynomial_martingale: kappa must be nonnegative");
  if (times.empty()) throw DomainError("mc_polynomial_martingale: no times");
  std::vector<std::size_t> idx;
  for (double t : times) {
    const double k = t / cfg.dt;
    if (!(t >= 0.0) || std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, k))
      throw DomainError("mc_polynomial_martingale: times must be nonnegative multiples of dt");
    idx.push_back(static_cast<std::size_t>(std::llround(k)));
  }
  const int M = std::max(2, P.max_variable());
  const std::size_t n_steps = std::max<std::size_t>(1, *std::max_element(idx.begin(), idx.end()));

  const auto rows = run_samples<std::vector<double>>(cfg, [&](std::size_t, std::uint64_t seed) {
    const auto path = loewner::coefficient_path(loewner::sample_driver(kappa, cfg.dt, n_steps, seed), M);
    std::vector<double> vals;
    std::vector<double> f(M);
    for (std::size_t k : idx) {
      for (int m = 1; m <= M; ++m) f[m - 1] = path.coeffs.at(-m)[k];
      vals.push_back(P.evaluate(f));
    }
    return vals;
  });

  std::vector<Estimate> out;
  for (std::size_t j = 0; j < times.size(); ++j) {
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(r[j]);
    Estimate e = estimate_from(v);
    e.meta["estimand"] = "E[P(f_t)]";
    e.meta["t"] = std::to_string(times[j]);
    out.push_back(e);
  }
  return out;
}

}  // namespace slelab::estimators
