#pragma once

#include <cstddef>
#include <vector>

#include "slelab/common.hpp"
#include "slelab/virasoro/coeff_polynomial.hpp"
#include "slelab/virasoro/series.hpp"
#include "slelab/virasoro/verma.hpp"

namespace slelab::virasoro {

/// Operator on the truncated module as a sum of homogeneous parts; entry k carries
/// coefficients of total grade k in the f_m and lowers the level by k.
template <class R>
using GradedMatrix = std::vector<Matrix<R>>;

namespace detail {

template <class R>
Matrix<R> zero_matrix(std::size_t d) {
  return Matrix<R>(d, std::vector<R>(d, R(0)));
}

template <class R>
Matrix<R> identity_matrix(std::size_t d) {
  auto m = zero_matrix<R>(d);
  for (std::size_t i = 0; i < d; ++i) m[i][i] = R(1);
  return m;
}

template <class R>
void add_product(Matrix<R>& out, const Matrix<R>& a, const Matrix<R>& b, const R& scale) {
  const std::size_t d = a.size();
  const R zero(0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == zero) continue;
      const R s = scale * a[i][k];
      for (std::size_t j = 0; j < d; ++j)
        if (b[k][j] != zero) out[i][j] = out[i][j] + s * b[k][j];
    }
}

template <class R, class F>
Matrix<R> lift(const Matrix<F>& m) {
  Matrix<R> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(R(x));
  return out;
}

/// phi(w) = f(w)/w = 1 + sum f_m w^m and f'(w), to order K.
template <class R>
std::pair<FormalSeries<R>, FormalSeries<R>> normalised_map(const std::vector<R>& f, int K) {
  auto phi = FormalSeries<R>::one(K), fp = FormalSeries<R>::one(K);
  for (int m = 1; m <= K && m <= static_cast<int>(f.size()); ++m) {
    phi[m] = f[m - 1];
    fp[m] = R(m + 1) * f[m - 1];
  }
  return {phi, fp};
}

}  // namespace detail

template <class R>
GradedMatrix<R> graded_product(const GradedMatrix<R>& a, const GradedMatrix<R>& b) {
  const int K = static_cast<int>(std::min(a.size(), b.size())) - 1;
  const std::size_t d = a.front().size();
  GradedMatrix<R> out(K + 1, detail::zero_matrix<R>(d));
  for (int i = 0; i <= K; ++i)
    for (int j = 0; i + j <= K; ++j) detail::add_product(out[i + j], a[i], b[j], R(1));
  return out;
}

/// Inverse of a graded operator whose grade-0 part is the identity.
template <class R>
GradedMatrix<R> graded_inverse(const GradedMatrix<R>& g) {
  const int K = static_cast<int>(g.size()) - 1;
  const std::size_t d = g.front().size();
  GradedMatrix<R> inv(K + 1, detail::zero_matrix<R>(d));
  inv[0] = detail::identity_matrix<R>(d);
  for (int k = 1; k <= K; ++k)
    for (int j = 1; j <= k; ++j) detail::add_product(inv[k], g[j], inv[k - j], R(-1));
  return inv;
}

/// G_f for f(w) = w + sum_{m>=1} f[m-1] w^{m+1}, solved grade by grade from the flat
/// connection: G^{(k)} = -(1/k) sum_{n=1}^{k} G^{(k-n)} b_n L_n with
/// b_n = sum_m m f_m [w^{n-m}] f'(w) (f(w)/w)^{-n-2}.
/// R is either the scalar field F (numeric f) or a ring of polynomials over F.
template <class F, class R>
GradedMatrix<R> gf_expand(const std::vector<R>& f, const VermaModule<F>& module, int K) {
  if (K < 0 || K > module.max_level()) throw DomainError("gf_expand: need 0 <= K <= max level");
  const std::size_t d = module.dimension();
  const auto [phi, fp] = detail::normalised_map(f, K);

  std::vector<R> b(K + 1, R(0));
  for (int n = 1; n <= K; ++n) {
    const auto s = fp * phi.pow(-n - 2);
    for (int m = 1; m <= n && m <= static_cast<int>(f.size()); ++m) b[n] = b[n] + R(m) * f[m - 1] * s[n - m];
  }

  std::vector<Matrix<R>> modes(K + 1);
  for (int n = 1; n <= K; ++n) modes[n] = detail::lift<R>(module.mode_matrix(n));

  GradedMatrix<R> g(K + 1, detail::zero_matrix<R>(d));
  g[0] = detail::identity_matrix<R>(d);
  for (int k = 1; k <= K; ++k)
    for (int n = 1; n <= k; ++n) detail::add_product(g[k], g[k - n], modes[n], ratio<R>(-1, k) * b[n]);
  return g;
}

/// Symbolic G_f: f_m are the polynomial variables.
template <class F>
GradedMatrix<CoeffPolynomial<F>> gf_expand(const VermaModule<F>& module, int K) {
  std::vector<CoeffPolynomial<F>> f;
  for (int m = 1; m <= K; ++m) f.push_back(CoeffPolynomial<F>::variable(m));
  return gf_expand(f, module, K);
}

template <class R>
struct Conjugation {
  GradedMatrix<R> conjugated;  ///< G_f^{-1} L_m G_f by matrix products
  GradedMatrix<R> direct;      ///< central term plus sum_{n>=m} L_n [w^{n-m}] f'^2 (f/w)^{-n-2}
  R central;                   ///< (c/12) [w^{-m-2}] Sf, of grade -m
  int max_source_level;        ///< columns compared: sources at or below this level
  bool agrees;
};

template <class F, class R>
Conjugation<R> gf_conjugate_mode(const std::vector<R>& f, int m, const VermaModule<F>& module, int K) {
  const auto g = gf_expand(f, module, K);
  const std::size_t d = module.dimension();
  const auto [phi, fp] = detail::normalised_map(f, K + 3);

  GradedMatrix<R> lm(K + 1, detail::zero_matrix<R>(d));
  lm[0] = detail::lift<R>(module.mode_matrix(m));
  Conjugation<R> out;
  out.conjugated = graded_product(graded_product(graded_inverse(g), lm), g);

  FormalSeries<R> fser(K + 3);
  for (int i = 0; i <= K + 2; ++i) fser[i + 1] = phi[i];
  const auto sf = schwarzian(fser);
  out.central = -m - 2 >= 0 && -m <= K ? R(module.c()) * ratio<R>(1, 12) * sf.coeff(-m - 2) : R(0);

  out.direct.assign(K + 1, detail::zero_matrix<R>(d));
  const auto fp2 = fp * fp;
  for (int k = 0; k <= K; ++k) {
    const int n = m + k;
    const R coeff = (fp2 * phi.pow(-n - 2)).coeff(k);
    if (coeff != R(0)) detail::add_product(out.direct[k], detail::lift<R>(module.mode_matrix(n)),
                                           detail::identity_matrix<R>(d), coeff);
    if (k == -m)
      for (std::size_t i = 0; i < d; ++i) out.direct[k][i][i] = out.direct[k][i][i] + out.central;
  }

  out.max_source_level = module.max_level() - std::max(0, -m);
  out.agrees = true;
  for (int k = 0; k <= K; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      if (level_of(module.basis(j)) > out.max_source_level) continue;
      for (std::size_t i = 0; i < d; ++i)
        if (out.conjugated[k][i][j] != out.direct[k][i][j]) out.agrees = false;
    }
  return out;
}

template <class F>
Conjugation<CoeffPolynomial<F>> gf_conjugate_mode(int m, const VermaModule<F>& module, int K) {
  std::vector<CoeffPolynomial<F>> f;
  for (int i = 1; i <= K; ++i) f.push_back(CoeffPolynomial<F>::variable(i));
  return gf_conjugate_mode(f, m, module, K);
}

}  // namespace slelab::virasoro
