#pragma once

#include <vector>

#include "slelab/virasoro/coeff_polynomial.hpp"
#include "slelab/virasoro/scalar.hpp"

namespace slelab::virasoro {

/// Truncated power series c_0 + c_1 w + ... + c_n w^n over a commutative ring R.
/// Every product is truncated at the smaller order of its factors.
template <class R>
class FormalSeries {
 public:
  explicit FormalSeries(int order = 0) : c_(order + 1, R(0)) {}
  FormalSeries(std::vector<R> c) : c_(std::move(c)) {}

  static FormalSeries one(int order) {
    FormalSeries s(order);
    s.c_[0] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_[i]; }
  R& operator[](int i) { return c_[i]; }
  /// Coefficient of w^i, zero outside [0, order].
  R coeff(int i) const { return i >= 0 && i <= order() ? c_[i] : R(0); }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i)
      for (int j = 0; i + j <= s.order(); ++j) s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
    return s;
  }
  friend FormalSeries operator*(const R& k, const FormalSeries& a) {
    FormalSeries s = a;
    for (auto& x : s.c_) x = k * x;
    return s;
  }

  /// 1 / s for a series with constant term 1.
  FormalSeries reciprocal() const {
    if (c_[0] != R(1)) throw DomainError("FormalSeries::reciprocal: constant term must be 1");
    FormalSeries r(order());
    r.c_[0] = R(1);
    for (int n = 1; n <= order(); ++n) {
      R acc = R(0);
      for (int j = 1; j <= n; ++j) acc = acc + c_[j] * r.c_[n - j];
      r.c_[n] = R(0) - acc;
    }
    return r;
  }

  FormalSeries pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    FormalSeries r = one(order()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  FormalSeries derivative() const {
    FormalSeries d(std::max(0, order() - 1));
    for (int i = 1; i <= order(); ++i) d.c_[i - 1] = R(i) * c_[i];
    return d;
  }

  /// s(g(w)) for g with zero constant term.
  FormalSeries compose(const FormalSeries& g) const {
    if (g.c_[0] != R(0)) throw DomainError("FormalSeries::compose: inner series must vanish at 0");
    const int n = std::min(order(), g.order());
    FormalSeries r(n);
    for (int i = order(); i >= 0; --i) {
      r = r * FormalSeries(std::vector<R>(g.c_.begin(), g.c_.begin() + n + 1));
      r.c_[0] = r.c_[0] + c_[i];
    }
    return r;
  }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
};

/// The scalar p/q in the ring R.
template <class R>
R ratio(int p, int q) {
  using S = typename ScalarOf<R>::type;
  return R(S(p) / S(q));
}

/// Schwarzian derivative f'''/f' - (3/2) (f''/f')^2 of a series with f'(0) = 1.
template <class R>
FormalSeries<R> schwarzian(const FormalSeries<R>& f) {
  const auto d1 = f.derivative();
  const auto inv = d1.reciprocal();
  const auto a = d1.derivative() * inv;
  const auto b = d1.derivative().derivative() * inv;
  return b - ratio<R>(3, 2) * (a * a);
}

}  // namespace slelab::virasoro
