#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "slelab/common.hpp"
#include "slelab/virasoro/scalar.hpp"
#include "slelab/virasoro/verma.hpp"

namespace slelab::virasoro {

/// c and h_{1;2} as functions of kappa, written for any scalar field.
template <class F>
F weight_h12(const F& kappa) {
  return (F(6) - kappa) / (F(2) * kappa);
}
template <class F>
F central_charge_of(const F& kappa) {
  return weight_h12(kappa) * (F(3) * kappa - F(8));
}

namespace detail {
template <class F>
bool all_zero(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}
}  // namespace detail

template <class F>
struct NullVectorReport {
  F kappa, c, h;
  VermaVector<F> vector;  ///< (-2 L_{-2} + (kappa/2) L_{-1}^2)|h>
  VermaVector<F> l1;      ///< L_1 applied to it
  VermaVector<F> l2;      ///< L_2 applied to it
  Matrix<F> gram;         ///< level-2 Gram matrix, basis {L_{-2}, L_{-1}^2}
  F gram_determinant;
  std::vector<F> gram_times_vector;
  bool pass;  ///< singular: L_1 and L_2 annihilate it
};

/// Level-2 vector in V(c, h) for explicit c, h (used for the generic-weight controls).
template <class F>
NullVectorReport<F> null_vector_level2(const F& kappa, const F& c, const F& h) {
  if (is_zero(kappa)) throw DomainError("null_vector_level2: kappa must be nonzero");
  VermaModule<F> mod(c, h, 2);
  auto n = F(-2) * VermaVector<F>::basis({2}) + (kappa / F(2)) * VermaVector<F>::basis({1, 1});
  NullVectorReport<F> r{kappa, c, h, n, mod.apply_mode(1, n), mod.apply_mode(2, n), mod.gram(2), F(0), {}, false};
  r.gram_determinant = mod.gram_determinant(2);
  const auto res = mod.radical_residual(n);
  r.gram_times_vector.assign(res.begin() + 2, res.end());
  r.pass = r.l1.is_zero() && r.l2.is_zero();
  return r;
}

/// The null vector in V(c_kappa, h_{1;2}).
template <class F>
NullVectorReport<F> null_vector_level2(const F& kappa) {
  return null_vector_level2(kappa, central_charge_of(kappa), weight_h12(kappa));
}

struct Radial {};
struct Dipolar {};
struct Annular {
  double p;
  int M = 40;
};
using Geometry = std::variant<Radial, Dipolar, Annular>;

struct AnnularCoefficients {
  std::vector<double> a;  ///< a[0] = a_{-1}, a[1] = a_0, ..., a[n_max + 1] = a_{n_max}
  double tail_bound;      ///< sum_{m > M} e^{-2 m p}; each sinh^{-2} tail is below 4/(1-e^{-2p})^2 times this
  double at(int n) const { return a.at(n + 1); }
};

/// W_{-2} coefficients of the annular generator with the sinh sums cut at m = M.
inline AnnularCoefficients annular_w_coeffs(double p, int n_max, int M) {
  if (!(p > 0.0)) throw DomainError("annular_w_coeffs: p must be positive");
  if (n_max < -1 || M < 1) throw DomainError("annular_w_coeffs: need n_max >= -1 and M >= 1");
  AnnularCoefficients out;
  out.a.assign(n_max + 2, 0.0);
  out.a[0] = 0.25;
  if (n_max >= 0) {
    double s = 0.0;
    for (int m = M; m >= 1; --m) s += 1.0 / std::pow(std::sinh(m * p), 2);
    out.a[1] = 0.25 * (1.0 + 2.0 * s);
  }
  for (int n = 1; n <= n_max; ++n) {
    double s = 0.0;
    for (int m = M; m >= 1; --m) {
      const double sh = std::sinh(m * p);
      s += std::pow(1.0 / std::tanh(m * p), 2 * n - 2) / (sh * sh * sh * sh);
    }
    out.a[n + 1] = (n % 2 ? -0.5 : 0.5) * s;
  }
  out.tail_bound = std::exp(-2.0 * (M + 1) * p) / (1.0 - std::exp(-2.0 * p));
  return out;
}

template <class F>
struct EigenvalueReport {
  F eigenvalue;                ///< coefficient of |omega> in A|omega>
  VermaVector<F> image;        ///< A|omega>
  VermaVector<F> remainder;    ///< A|omega> - eigenvalue |omega>
  std::vector<F> residual;     ///< Gram times remainder, level by level
  double residual_norm;        ///< max |residual|; exactly 0 for exact scalars
  bool singular;               ///< L_1, L_2 annihilate the remainder
  bool pass;
};

namespace detail {

template <class F>
double max_abs(const std::vector<F>& v) {
  double m = 0.0;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<F, RationalFunction>)
      m = std::max(m, is_zero(x) ? 0.0 : INFINITY);
    else
      m = std::max(m, std::abs(to_double(x)));
  }
  return m;
}

template <class F>
double max_abs(const VermaVector<F>& v) {
  std::vector<F> c;
  for (const auto& [p, x] : v.terms()) c.push_back(x);
  return max_abs(c);
}

}  // namespace detail

/// A = -2 W_{-2} + (kappa/2) W_{-1}^2 on |omega> in V(c_kappa, h_{1;2}). The remainder after
/// removing the |omega> component is a multiple of the null vector, so it is checked in the
/// quotient: Gram * remainder = 0, and L_1, L_2 annihilate it.
template <class F>
EigenvalueReport<F> diffusion_eigenvalue(const Geometry& geometry, const F& kappa, int n_max = 4,
                                         double tolerance = 1e-12) {
  if (is_zero(kappa)) throw DomainError("diffusion_eigenvalue: kappa must be nonzero");
  const F h = weight_h12(kappa);
  VermaModule<F> mod(central_charge_of(kappa), h, 2);
  const auto omega = mod.highest_weight();

  std::vector<std::pair<int, F>> w1, w2;  // (mode, coefficient)
  if (std::holds_alternative<Radial>(geometry)) {
    w1 = {{-1, F(1)}, {1, F(1)}};
    w2 = {{-2, F(1)}, {0, F(1)}};
  } else if (std::holds_alternative<Dipolar>(geometry)) {
    w1 = {{-1, F(1)}, {1, F(-1)}};
    w2 = {{-2, F(1)}, {0, F(-1)}};
  } else {
    if constexpr (!std::is_same_v<F, double>) {
      throw DomainError("diffusion_eigenvalue: annular coefficients are real, use double");
    } else {
      const auto& an = std::get<Annular>(geometry);
      const auto co = annular_w_coeffs(an.p, n_max, an.M);
      w1 = {{-1, 0.5}, {1, 0.5}};
      for (int n = -1; n <= n_max; ++n) w2.push_back({2 * n, co.at(n)});
    }
  }
  auto apply = [&](const std::vector<std::pair<int, F>>& w, const VermaVector<F>& v) {
    VermaVector<F> out;
    for (const auto& [m, a] : w) out += a * mod.apply_mode(m, v);
    return out;
  };

  EigenvalueReport<F> r;
  r.image = F(-2) * apply(w2, omega) + (kappa / F(2)) * apply(w1, apply(w1, omega));
  r.eigenvalue = r.image.coefficient({});
  r.remainder = r.image - r.eigenvalue * omega;
  r.residual = mod.radical_residual(r.remainder);
  r.residual_norm = detail::max_abs(r.residual);
  const double sing = std::max(detail::max_abs(mod.apply_mode(1, r.remainder)), detail::max_abs(mod.apply_mode(2, r.remainder)));
  if constexpr (std::is_same_v<F, double>) {
    r.singular = sing <= tolerance;
    r.pass = r.singular && r.residual_norm <= tolerance;
  } else {
    r.singular = sing == 0.0;
    r.pass = r.singular && r.residual_norm == 0.0;
  }
  return r;
}

template <class F>
struct GeneratorReport {
  F kappa, c, h;
  VermaVector<F> drift;     ///< (-2 L_{-2} + (kappa/2) L_{-1}^2)|omega>
  std::vector<F> residual;  ///< Gram * drift over levels <= max_level
  bool annihilated;         ///< every positive mode up to max_level kills the drift
  bool pass;
};

/// The dt part of dG_t|omega>, G_t (-2 L_{-2} + (kappa/2) L_{-1}^2)|omega>, vanishes in the
/// irreducible module: the drift is in the radical of the Shapovalov form.
template <class F>
GeneratorReport<F> sle_generator_check(const F& kappa, int max_level = 4) {
  if (is_zero(kappa)) throw DomainError("sle_generator_check: kappa must be nonzero");
  if (max_level < 2) throw DomainError("sle_generator_check: max_level must be at least 2");
  const F h = weight_h12(kappa), c = central_charge_of(kappa);
  VermaModule<F> mod(c, h, max_level);
  GeneratorReport<F> r{kappa, c, h, {}, {}, true, false};
  r.drift = F(-2) * mod.apply_mode(-2, mod.highest_weight()) +
            (kappa / F(2)) * mod.apply_mode(-1, mod.apply_mode(-1, mod.highest_weight()));
  for (int n = 1; n <= max_level; ++n)
    if (!mod.apply_mode(n, r.drift).is_zero()) r.annihilated = false;
  r.residual = mod.radical_residual(r.drift);
  // Descendants L_{-k} drift must also be null; check the first ones that fit.
  for (int k = 1; k + 2 <= max_level; ++k) {
    const auto d = mod.radical_residual(mod.apply_mode(-k, r.drift));
    r.residual.insert(r.residual.end(), d.begin(), d.end());
  }
  r.pass = r.annihilated && detail::all_zero(r.residual);
  return r;
}

/// [L_a, L_b] v - (a - b) L_{a+b} v - (c/12)(a^3 - a) delta_{a+b,0} v.
template <class F>
VermaVector<F> commutator_residual(const VermaModule<F>& mod, int a, int b, const VermaVector<F>& v) {
  auto out = mod.apply_mode(a, mod.apply_mode(b, v)) - mod.apply_mode(b, mod.apply_mode(a, v)) -
             F(a - b) * mod.apply_mode(a + b, v);
  if (a + b == 0) out -= (mod.c() * F(a * a * a - a) / F(12)) * v;
  return out;
}

/// [[L_a, L_b], L_c] + cyclic, applied to v through nested mode actions.
template <class F>
VermaVector<F> jacobi_residual(const VermaModule<F>& mod, int a, int b, int c, const VermaVector<F>& v) {
  auto comm = [&](int x, int y, auto inner) {
    // [[L_x, L_y], L_z] v with L_z given by inner
    return [&, x, y, inner](const VermaVector<F>& u) {
      auto xy = [&](const VermaVector<F>& w) {
        return mod.apply_mode(x, mod.apply_mode(y, w)) - mod.apply_mode(y, mod.apply_mode(x, w));
      };
      return xy(inner(u)) - inner(xy(u));
    };
  };
  auto mode = [&](int z) { return [&, z](const VermaVector<F>& u) { return mod.apply_mode(z, u); }; };
  return comm(a, b, mode(c))(v) + comm(b, c, mode(a))(v) + comm(c, a, mode(b))(v);
}

}  // namespace slelab::virasoro
