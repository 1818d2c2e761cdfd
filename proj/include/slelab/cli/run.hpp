#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <iostream>
#include <string>
#include <vector>

#include "slelab/analytic.hpp"
#include "slelab/cli/checks.hpp"
#include "slelab/cli/config.hpp"
#include "slelab/cli/output.hpp"
#include "slelab/cli/svg.hpp"
#include "slelab/estimators.hpp"
#include "slelab/loewner.hpp"

namespace slelab::cli {

namespace detail {

inline estimators::MCConfig mc_config(const ExperimentConfig& c, double horizon) {
  estimators::MCConfig m;
  m.n_samples = c.integer("samples");
  m.dt = c.number("dt");
  m.horizon = horizon;
  m.base_seed = static_cast<std::uint64_t>(c.integer("seed"));
  m.workers = static_cast<int>(c.integer("workers"));
  m.validate();
  return m;
}

inline estimators::MCConfig mc_config(const ExperimentConfig& c) {
  return mc_config(c, c.values().contains("horizon") ? c.number("horizon") : c.number("T"));
}

inline std::size_t grid_steps(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) throw DomainError("T and dt must be positive");
  const double k = T / dt;
  if (std::abs(k - std::round(k)) > 1e-6 * std::max(1.0, k)) throw DomainError("T must be a multiple of dt");
  return static_cast<std::size_t>(std::llround(k));
}

inline std::vector<double> log_spaced(double lo, double hi, std::int64_t n) {
  if (!(lo > 0.0 && hi >= lo) || n < 1) throw DomainError("log-spaced range needs 0 < min <= max and count >= 1");
  std::vector<double> v;
  for (std::int64_t i = 0; i < n; ++i)
    v.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1)));
  return v;
}

/// Closed form where one exists for these parameters, null otherwise.
template <class Fn>
json try_analytic(Fn&& fn) {
  try {
    return number(fn());
  } catch (const DomainError&) {
    return nullptr;
  }
}

inline loewner::Geometry geometry_of(const ExperimentConfig& c) {
  const std::string g = c.string("geometry");
  if (g == "chordal") return loewner::Geometry::chordal();
  if (g == "radial") return loewner::Geometry::radial();
  if (g == "dipolar") return loewner::Geometry::dipolar();
  if (g == "annular") return loewner::Geometry::annular(c.number("p"), static_cast<int>(c.integer("trunc")));
  throw ConfigError("unknown geometry '" + g + "'");
}

inline void run_trace(const ExperimentConfig& c, Result& r) {
  const std::string fmt = c.string("format");
  if (fmt != "svg" && fmt != "json" && fmt != "csv") throw ConfigError("trace format must be svg, json or csv");
  const auto geo = geometry_of(c);
  const std::size_t n = grid_steps(c.number("T"), c.number("dt"));
  const std::string drv = c.string("driver");
  loewner::Driver d;
  if (drv == "brownian")
    d = loewner::sample_driver(c.number("kappa"), c.number("dt"), n, static_cast<std::uint64_t>(c.integer("seed")));
  else if (drv == "constant")
    d = loewner::constant_driver(c.number("driver_value"), c.number("dt"), n);
  else
    throw ConfigError("driver must be brownian or constant");
  if (c.integer("stride") < 1) throw DomainError("stride must be positive");
  loewner::TraceOptions opt;
  opt.stride = static_cast<std::size_t>(c.integer("stride"));
  const auto tr = loewner::trace(geo, d, opt);
  for (std::size_t k = 0; k < tr.points.size(); ++k) {
    json rec;
    rec["t"] = tr.times[k];
    rec["x"] = number(tr.points[k].real());
    rec["y"] = number(tr.points[k].imag());
    r.records.push_back(rec);
  }
  if (fmt == "svg") r.svg = render_trace_svg(tr);
}

inline void run_cardy(const ExperimentConfig& c, Result& r) {
  const double a = c.number("a"), b = c.number("b"), k = c.number("kappa");
  const auto e = estimators::mc_cardy(a, b, k, mc_config(c));
  json rec;
  rec["a"] = a;
  rec["b"] = b;
  rec["kappa"] = k;
  put_estimate(rec, e);
  rec["analytic"] = try_analytic([&] { return analytic::cardy_probability(a, b, k); });
  r.records.push_back(rec);
}

inline void run_touch(const ExperimentConfig& c, Result& r, bool same_swallow) {
  const double x = c.number("x"), X = c.number("X"), k = c.number("kappa");
  auto e = estimators::mc_touch_interval(x, X, k, mc_config(c));
  json rec;
  rec["x"] = x;
  rec["X"] = X;
  rec["kappa"] = k;
  if (same_swallow) {
    // tau_x = tau_X is the complement of tau_x < tau_X
    e.mean = 1.0 - e.mean;
    e.meta["estimand"] = "P[tau_x = tau_X]";
    put_estimate(rec, e);
    rec["analytic"] = try_analytic([&] { return analytic::same_swallow_probability(x, X, k); });
  } else {
    put_estimate(rec, e);
    rec["analytic"] = try_analytic([&] { return 1.0 - analytic::same_swallow_probability(x, X, k); });
  }
  r.records.push_back(rec);
}

inline void run_dim(const ExperimentConfig& c, Result& r) {
  const double k = c.number("kappa");
  const cplx z0(c.number("z0_re"), c.number("z0"));
  const auto eps = log_spaced(c.number("eps_min"), c.number("eps_max"), c.integer("eps_count"));
  const auto res = estimators::mc_radius_tail(z0, k, eps, mc_config(c));
  for (std::size_t i = 0; i < eps.size(); ++i) {
    json rec;
    rec["eps"] = eps[i];
    put_estimate(rec, res.estimates[i]);
    r.records.push_back(rec);
  }
  json f = fit_record("log P[rho <= eps] vs log eps", res.fit, (8.0 - k) / 8.0);
  f["dimension"] = number(2.0 - res.fit.slope);
  f["expected_dimension"] = try_analytic([&] { return analytic::fractal_dimension(k); });
  r.fits.push_back(f);
}

inline void run_zigzag1(const ExperimentConfig& c, Result& r) {
  const double x = c.number("x"), k = c.number("kappa");
  const auto dxs = log_spaced(c.number("dx_min"), c.number("dx_max"), c.integer("dx_count"));
  const auto res = estimators::mc_zigzag_one(x, dxs, k, mc_config(c));
  for (std::size_t i = 0; i < dxs.size(); ++i) {
    json rec;
    rec["dx"] = dxs[i];
    rec["dx_over_x"] = dxs[i] / x;
    put_estimate(rec, res.estimates[i]);
    r.records.push_back(rec);
  }
  r.fits.push_back(fit_record("log P1 vs log(dx/x)", res.fit,
                              k > 0.0 ? analytic::cft_params(k).h13() : std::numeric_limits<double>::quiet_NaN()));
}

inline void run_zigzag2(const ExperimentConfig& c, Result& r) {
  estimators::ZigzagTwoOptions o;
  o.restart_dy = c.number("restart_dy");
  o.restart_repeats = static_cast<int>(c.integer("restart_repeats"));
  const double x = c.number("x"), X = c.number("X"), y = c.number("y");
  const auto res = estimators::mc_zigzag_two(x, X, y, c.number("kappa"), mc_config(c), o);
  auto add = [&](const std::string& method, const estimators::Estimate& e) {
    json rec;
    rec["method"] = method;
    rec["x"] = x;
    rec["X"] = X;
    rec["y"] = y;
    put_estimate(rec, e);
    r.records.push_back(rec);
  };
  add("direct", res.direct);
  if (o.restart_dy > 0.0) add("restart", res.restart);
}

inline void run_dipolar(const ExperimentConfig& c, Result& r) {
  if (c.integer("stride") < 1) throw DomainError("stride must be positive");
  const auto res = estimators::mc_dipolar_avoidance(c.number("kappa"), c.list("deltas"), mc_config(c, c.number("T")),
                                                    static_cast<std::size_t>(c.integer("stride")));
  for (std::size_t i = 0; i < res.deltas.size(); ++i) {
    json rec;
    rec["delta"] = res.deltas[i];
    put_estimate(rec, res.estimates[i]);
    rec["smallest_distance"] = number(res.smallest_distance);
    rec["runs_touching"] = res.runs_touching;
    r.records.push_back(rec);
  }
}

inline void run_restriction(const ExperimentConfig& c, Result& r) {
  if (std::abs(c.number("kappa") - 8.0 / 3.0) > 1e-12) throw DomainError("restriction runs at kappa = 8/3 only");
  const std::string kind = c.string("hull");
  analytic::HullSpec hull;
  if (kind == "semidisk")
    hull = analytic::SemiDisk{c.number("hull_x"), c.number("hull_size")};
  else if (kind == "slit")
    hull = analytic::VerticalSlit{c.number("hull_x"), c.number("hull_size")};
  else
    throw ConfigError("hull must be semidisk or slit");
  const auto e = estimators::mc_restriction(hull, mc_config(c));
  json rec;
  rec["hull"] = kind;
  rec["hull_x"] = c.number("hull_x");
  rec["hull_size"] = c.number("hull_size");
  put_estimate(rec, e);
  rec["analytic"] = try_analytic([&] { return analytic::restriction_probability(hull); });
  r.records.push_back(rec);
}

inline void run_annular(const ExperimentConfig& c, Result& r) {
  const std::string which = c.string("boundary");
  if (which != "outer" && which != "inner") throw ConfigError("boundary must be outer or inner");
  const auto side = which == "outer" ? loewner::AnnularBoundary::Outer : loewner::AnnularBoundary::Inner;
  const double p = c.number("p"), k = c.number("kappa"), dt = c.number("dt"), a0 = c.number("angle");
  const int M = static_cast<int>(c.integer("trunc"));
  if (c.integer("stride") < 1) throw DomainError("stride must be positive");
  const auto stride = static_cast<std::size_t>(c.integer("stride"));
  const std::size_t n = grid_steps(c.number("T"), dt);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= n; i += stride) idx.push_back(i);
  if (idx.back() != n) idx.push_back(n);
  const auto rows = estimators::run_samples<std::vector<double>>(
      mc_config(c, c.number("T")), [&](std::size_t, std::uint64_t seed) {
        const auto path = loewner::annular_boundary_motion(side, p, loewner::sample_driver(k, dt, n, seed), a0, M);
        std::vector<double> v;
        for (std::size_t i : idx) v.push_back(path[i].second);
        return v;
      });
  for (std::size_t j = 0; j < idx.size(); ++j) {
    std::vector<double> v;
    for (const auto& row : rows) v.push_back(row[j]);
    json rec;
    rec["t"] = dt * static_cast<double>(idx[j]);
    put_estimate(rec, estimators::estimate_from(v));
    r.records.push_back(rec);
  }
}

inline void run_martingale(const ExperimentConfig& c, Result& r) {
  using Poly = virasoro::CoeffPolynomial<virasoro::Rational>;
  const double k = c.number("kappa");
  const std::string which = c.string("poly");
  Poly P;
  if (which == "f1")
    P = Poly::variable(1);
  else if (which == "f2")
    P = Poly::variable(2);
  else if (which == "quadratic")
    P = Poly::variable(1, 2) - Poly(virasoro::Rational(k) / 2) * Poly::variable(2);
  else
    throw ConfigError("poly must be f1, f2 or quadratic");
  const auto times = c.list("times");
  if (times.empty()) throw DomainError("martingale: no times");
  const double t_max = *std::max_element(times.begin(), times.end());
  const double horizon = c.number("dt") * static_cast<double>(std::max<std::size_t>(1, std::llround(t_max / c.number("dt"))));
  const auto est = estimators::mc_polynomial_martingale(P, k, times, mc_config(c, horizon));
  for (std::size_t i = 0; i < times.size(); ++i) {
    json rec;
    rec["poly"] = which;
    rec["t"] = times[i];
    put_estimate(rec, est[i]);
    rec["expected"] = which == "f2" ? 2.0 * times[i] : 0.0;
    r.records.push_back(rec);
  }
}

inline void run_virasoro(const ExperimentConfig& c, Result& r) {
  const std::string ks = c.string("kappa_exact");
  const virasoro::Rational kappa = ks.empty() ? virasoro::Rational(c.number("kappa")) : parse_rational(ks);
  r.records = algebra_checks(kappa, static_cast<int>(c.integer("grade")), c.number("p"),
                             static_cast<int>(c.integer("trunc")));
}

}  // namespace detail

/// Runs the experiment without writing anything.
inline Result execute(const ExperimentConfig& c) {
  Result r;
  r.config = c;
  const std::string fmt = c.string("format");
  if (fmt != "json" && fmt != "csv" && !(fmt == "svg" && c.command() == "trace"))
    throw ConfigError("format must be json or csv" + std::string(c.command() == "trace" ? " or svg" : ""));
  if (c.integer("workers") < 1) throw ConfigError("workers must be positive");
  if (c.integer("seed") < 0) throw ConfigError("seed must be nonnegative");
  const std::string& cmd = c.command();
  if (cmd == "trace") detail::run_trace(c, r);
  else if (cmd == "cardy") detail::run_cardy(c, r);
  else if (cmd == "touch") detail::run_touch(c, r, false);
  else if (cmd == "same-swallow") detail::run_touch(c, r, true);
  else if (cmd == "dim") detail::run_dim(c, r);
  else if (cmd == "zigzag1") detail::run_zigzag1(c, r);
  else if (cmd == "zigzag2") detail::run_zigzag2(c, r);
  else if (cmd == "dipolar-avoid") detail::run_dipolar(c, r);
  else if (cmd == "restriction") detail::run_restriction(c, r);
  else if (cmd == "annular-boundary") detail::run_annular(c, r);
  else if (cmd == "martingale") detail::run_martingale(c, r);
  else if (cmd == "virasoro-check") detail::run_virasoro(c, r);
  else throw ConfigError("unknown command '" + cmd + "'");
  return r;
}

/// Exit status 0 on success, 1 on a domain or configuration error, 2 on an I/O error.
inline int run(const ExperimentConfig& c, std::ostream& err = std::cerr) {
  try {
    write_output(execute(c));
    return 0;
  } catch (const IoError& e) {
    err << "slelab: I/O error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "slelab: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "slelab: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slelab::cli
