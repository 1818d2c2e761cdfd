#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <variant>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "slelab/common.hpp"

namespace slelab::analytic {

namespace detail {
inline void require_dense_phase(double kappa, const char* who) {
  if (!(kappa > 4.0 && kappa < 8.0)) throw DomainError(std::string(who) + ": kappa must lie in (4, 8)");
}
}  // namespace detail

/// P[tau_x = tau_X], 0 < x < X, 4 < kappa < 8.
/// The integrable singularity sigma^{-4/kappa} is removed by sigma = u^{kappa/(kappa-4)},
/// which turns the integrand into p (1 - s u^p)^{2(4-kappa)/kappa}.
inline double same_swallow_probability(double x, double X, double kappa) {
  detail::require_dense_phase(kappa, "same_swallow_probability");
  if (!(x > 0.0 && X > x)) throw DomainError("same_swallow_probability: need 0 < x < X");
  const double s = x / X;
  const double p = kappa / (kappa - 4.0);
  const double e = 2.0 * (4.0 - kappa) / kappa;
  auto integrand = [=](double u) { return p * std::pow(1.0 - s * std::pow(u, p), e); };
  double err = 0.0;
  const double I =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 25, 1e-13, &err);
  const double pref = std::pow(s, (kappa - 4.0) / kappa) * std::tgamma(4.0 / kappa) /
                      (std::tgamma((kappa - 4.0) / kappa) * std::tgamma((8.0 - kappa) / kappa));
  return std::clamp(pref * I, 0.0, 1.0);
}

namespace detail {

/// Unit solution of the weight-zero null-vector equation
///   phi'' + (4/kappa) (2u - 1) / (u (u - 1)) phi' = 0,
/// started at u = 0 with phi = 0 and u^{4/kappa} phi' = 1, integrated to u_end.
/// Regularised variables: u = v^p with p = kappa/(kappa-4), chi = u^{4/kappa} phi'.
inline double cardy_unit_solution(double u_end, double kappa) {
  namespace ode = boost::numeric::odeint;
  using S = std::array<double, 2>;
  const double p = kappa / (kappa - 4.0);
  const double a = 4.0 / kappa;
  auto rhs = [=](const S& y, S& dy, double v) {
    const double u = std::pow(v, p);
    dy[0] = p * y[1];
    dy[1] = a * y[1] / (1.0 - u) * p * std::pow(v, p - 1.0);
  };
  S y{0.0, 1.0};
  const double v_end = std::pow(u_end, 1.0 / p);
  if (v_end <= 0.0) return 0.0;
  ode::integrate_adaptive(ode::make_controlled(1e-14, 1e-13, ode::runge_kutta_dopri5<S>()), rhs, y, 0.0, v_end,
                          v_end * 1e-3);
  return y[0];
}

}  // namespace detail

/// P[tau_a < tau_b] for a < 0 < b. The boundary-value problem phi(0) = 1, phi(1) = 0 in
/// u = a/(a-b) is solved by shooting one solution from each end and matching value and
/// slope at u = 1/2 (the equation is symmetric under u -> 1 - u, and linear).
inline double cardy_probability(double a, double b, double kappa) {
  detail::require_dense_phase(kappa, "cardy_probability");
  if (!(a < 0.0 && b > 0.0)) throw DomainError("cardy_probability: need a < 0 < b");
  const double u = a / (a - b);
  const double half = detail::cardy_unit_solution(0.5, kappa);
  if (u <= 0.5) return 1.0 - detail::cardy_unit_solution(u, kappa) / (2.0 * half);
  return detail::cardy_unit_solution(1.0 - u, kappa) / (2.0 * half);
}

/// Canonical hulls attached to the real axis away from the origin.
struct SemiDisk {
  double x;
  double r;
};
struct VerticalSlit {
  double x;
  double h;
};
using HullSpec = std::variant<SemiDisk, VerticalSlit>;

inline void validate(const HullSpec& hull) {
  if (auto* d = std::get_if<SemiDisk>(&hull)) {
    if (!(d->r > 0.0 && d->r < std::abs(d->x))) throw DomainError("SemiDisk needs 0 < r < |x|");
  } else {
    const auto& s = std::get<VerticalSlit>(hull);
    if (!(s.x != 0.0 && s.h > 0.0)) throw DomainError("VerticalSlit needs x != 0 and h > 0");
  }
}

/// Uniformizing map of H minus the hull, f(0) = 0 and f(z) = z + O(1) at infinity.
/// Returns (f(z), f'(z)).
inline std::pair<cplx, cplx> hull_map(const HullSpec& hull, cplx z) {
  if (auto* d = std::get_if<SemiDisk>(&hull)) {
    const double r2 = d->r * d->r;
    const cplx w = z - d->x;
    return {z + r2 / w + r2 / d->x, 1.0 - r2 / (w * w)};
  }
  const auto& s = std::get<VerticalSlit>(hull);
  auto branch = [&](cplx w) {
    cplx r = std::sqrt(w * w + s.h * s.h);
    if (r.imag() < 0.0 || (r.imag() == 0.0 && w.real() < 0.0)) r = -r;
    return r;
  };
  const cplx w = z - s.x;
  const cplx r = branch(w);
  return {r - branch(cplx(-s.x, 0.0)), w / r};
}

/// P[SLE_{8/3} avoids the hull] = f_A'(0)^{5/8}.
inline double restriction_probability(const HullSpec& hull) {
  validate(hull);
  const double d = std::abs(hull_map(hull, 0.0).second);
  return std::pow(d, 5.0 / 8.0);
}

}  // namespace slelab::analytic
