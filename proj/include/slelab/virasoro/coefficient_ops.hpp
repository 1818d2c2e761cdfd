#pragma once

#include <string>
#include <vector>

#include "slelab/common.hpp"
#include "slelab/virasoro/coeff_polynomial.hpp"
#include "slelab/virasoro/series.hpp"

namespace slelab::virasoro {

/// First-order differential operator on polynomials in f_{-1}, ..., f_{-M}:
///   D P = scalar * P + sum_k image(k) dP/df_{-k}.
template <class F>
class CoeffOperator {
 public:
  using Poly = CoeffPolynomial<F>;

  CoeffOperator(int mode, int cutoff, int valid, std::vector<Poly> images, Poly scalar)
      : mode_(mode), cutoff_(cutoff), valid_(valid), images_(std::move(images)), scalar_(std::move(scalar)) {}

  int mode() const { return mode_; }
  int cutoff() const { return cutoff_; }
  /// Largest variable index the operator can differentiate without leaving the cutoff.
  int valid_variables() const { return valid_; }
  const Poly& image(int k) const { return images_.at(k - 1); }
  const Poly& scalar() const { return scalar_; }

  Poly operator()(const Poly& p) const {
    if (p.max_variable() > valid_)
      throw CutoffExceeded("operator of mode " + std::to_string(mode_) + " with cutoff " + std::to_string(cutoff_) +
                           " cannot act on f_-" + std::to_string(p.max_variable()));
    Poly out = scalar_ * p;
    for (int k = 1; k <= p.max_variable(); ++k) {
      const Poly d = p.derivative(k);
      if (!d.is_zero()) out += images_[k - 1] * d;
    }
    return out;
  }

 private:
  int mode_, cutoff_, valid_;
  std::vector<Poly> images_;
  Poly scalar_;
};

namespace detail {

/// F(x) = x f(1/x) = 1 + sum_k f_{-k} x^k, as a series in x = 1/z to order M.
template <class F>
FormalSeries<CoeffPolynomial<F>> map_at_infinity(int M) {
  auto s = FormalSeries<CoeffPolynomial<F>>::one(M);
  for (int k = 1; k <= M; ++k) s[k] = CoeffPolynomial<F>::variable(k);
  return s;
}

/// sum_k w(k) f_{-k} x^k plus constant c0.
template <class F, class W>
FormalSeries<CoeffPolynomial<F>> weighted_map(int M, int c0, W w) {
  FormalSeries<CoeffPolynomial<F>> s(M);
  s[0] = CoeffPolynomial<F>(c0);
  for (int k = 1; k <= M; ++k) s[k] = CoeffPolynomial<F>(F(w(k))) * CoeffPolynomial<F>::variable(k);
  return s;
}

}  // namespace detail

/// S_n, n >= 1: the variation f -> f + eps (f^{1-n} - y f') in the target, acting on the
/// coefficients at infinity. S_n f_{-k} = [x^{k-n}] (x f(1/x))^{1-n}; it lowers the grade by n.
template <class F>
CoeffOperator<F> s_operator(int n, int M) {
  if (n < 1) throw DomainError("s_operator: n must be positive");
  if (M < 1) throw DomainError("s_operator: cutoff must be positive");
  const auto pw = detail::map_at_infinity<F>(M).pow(1 - n);
  std::vector<CoeffPolynomial<F>> images;
  for (int k = 1; k <= M; ++k) images.push_back(pw.coeff(k - n));
  return CoeffOperator<F>(n, M, M, std::move(images), CoeffPolynomial<F>());
}

/// R_n: the source variation f -> f - eps z^{1-n} f' renormalised at infinity, with the
/// scalar part c zeta + h y_0 for n <= 0. Raises the grade by -n.
template <class F>
CoeffOperator<F> r_operator(int n, const F& c, const F& h, int M) {
  using Poly = CoeffPolynomial<F>;
  const int valid = M - std::max(0, -n);
  if (valid < 1) throw CutoffExceeded("r_operator: cutoff too small for mode " + std::to_string(n));
  const auto Fs = detail::map_at_infinity<F>(M);
  // x f'(1/x)-type series: P = f', Q2 = z f'', Q3 = z^2 f''' in x = 1/z.
  const auto P = detail::weighted_map<F>(M, 1, [](int k) { return 1 - k; });
  const auto Q2 = detail::weighted_map<F>(M, 0, [](int k) { return k * (k - 1); });
  const auto Q3 = detail::weighted_map<F>(M, 0, [](int k) { return -(k - 1) * k * (k + 1); });

  std::vector<Poly> y;
  const auto P2 = P * P;
  for (int k = 0; k <= -n; ++k) y.push_back((P2 * Fs.pow(-k - 2)).coeff(-n - k));

  std::vector<Poly> images;
  for (int j = 1; j <= M; ++j) {
    if (j > valid) {
      images.emplace_back();
      continue;
    }
    Poly im = Poly() - P.coeff(j - n);
    for (int k = 0; k <= -n; ++k) im += y[k] * Fs.pow(k + 1).coeff(j + k);
    images.push_back(im);
  }

  Poly scalar;
  if (n <= 0) {
    const auto inv = P.reciprocal();
    const auto a = Q2 * inv;
    const auto sf = Q3 * inv - ratio<Poly>(3, 2) * (a * a);
    scalar = Poly(c) * ratio<Poly>(1, 12) * sf.coeff(-n) + Poly(h) * y[0];
  }
  return CoeffOperator<F>(n, M, valid, std::move(images), std::move(scalar));
}

/// Result of building the span of R_{-m_1} ... R_{-m_j} 1 and applying 2 S_2 + (kappa/2) S_1^2.
template <class F>
struct MartingaleSubspaceCheck {
  F kappa;
  int grade;
  std::vector<std::vector<int>> words;        ///< mode sequences (m_1, ..., m_j), applied right to left
  std::vector<CoeffPolynomial<F>> elements;   ///< R_{-m_1} ... R_{-m_j} 1
  std::vector<CoeffPolynomial<F>> images;     ///< generator applied to each element
  bool pass;
};

/// 2 S_2 + (kappa/2) S_1^2 with cutoff M.
template <class F>
CoeffPolynomial<F> martingale_generator(const F& kappa, const CoeffPolynomial<F>& p, int M) {
  const auto s1 = s_operator<F>(1, M), s2 = s_operator<F>(2, M);
  return CoeffPolynomial<F>(F(2)) * s2(p) + CoeffPolynomial<F>(kappa / F(2)) * s1(s1(p));
}

template <class F>
MartingaleSubspaceCheck<F> martingale_subspace_check(const F& kappa, int K) {
  if (is_zero(kappa)) throw DomainError("martingale_subspace_check: kappa must be nonzero");
  const F two = F(2);
  const F h = (F(6) - kappa) / (two * kappa);
  const F c = h * (F(3) * kappa - F(8));
  const int M = K + 2;
  std::vector<CoeffOperator<F>> r;
  for (int m = 1; m <= K; ++m) r.push_back(r_operator<F>(-m, c, h, M));

  MartingaleSubspaceCheck<F> out{kappa, K, {}, {}, {}, true};
  std::vector<std::vector<std::size_t>> by_grade(K + 1);
  out.words.push_back({});
  out.elements.push_back(CoeffPolynomial<F>(F(1)));
  by_grade[0].push_back(0);
  for (int g = 1; g <= K; ++g)
    for (int m = 1; m <= g; ++m)
      for (std::size_t i : by_grade[g - m]) {
        auto w = out.words[i];
        w.insert(w.begin(), m);
        out.words.push_back(std::move(w));
        out.elements.push_back(r[m - 1](out.elements[i]));
        by_grade[g].push_back(out.elements.size() - 1);
      }
  for (const auto& p : out.elements) {
    out.images.push_back(martingale_generator(kappa, p, M));
    if (!out.images.back().is_zero()) out.pass = false;
  }
  return out;
}

}  // namespace slelab::virasoro
