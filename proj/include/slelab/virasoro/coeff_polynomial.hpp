#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "slelab/virasoro/scalar.hpp"

namespace slelab::virasoro {

/// Exact polynomial in the Loewner coefficients. Variable k >= 1 stands for f_{-k}
/// (expansion at infinity) or f_k (expansion at 0); the grade of a variable is k.
template <class F>
class CoeffPolynomial {
 public:
  /// Exponent of variable k at position k - 1, without trailing zeros.
  using Monomial = std::vector<int>;

  CoeffPolynomial() = default;
  CoeffPolynomial(int c) : CoeffPolynomial(F(c)) {}
  CoeffPolynomial(const F& c) {
    if (!virasoro::is_zero(c)) terms_[{}] = c;
  }

  static CoeffPolynomial variable(int k, int power = 1) {
    if (k < 1) throw DomainError("CoeffPolynomial: variable index must be positive");
    CoeffPolynomial p;
    Monomial m(k, 0);
    m[k - 1] = power;
    p.terms_[m] = F(1);
    return p;
  }

  static int grade(const Monomial& m) {
    int g = 0;
    for (std::size_t i = 0; i < m.size(); ++i) g += static_cast<int>(i + 1) * m[i];
    return g;
  }

  const std::map<Monomial, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? F(0) : it->second;
  }
  int max_grade() const {
    int g = -1;
    for (const auto& [m, c] : terms_) g = std::max(g, grade(m));
    return g;
  }
  int max_variable() const {
    int k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, static_cast<int>(m.size()));
    return k;
  }

  CoeffPolynomial homogeneous(int g) const {
    CoeffPolynomial p;
    for (const auto& [m, c] : terms_)
      if (grade(m) == g) p.terms_[m] = c;
    return p;
  }
  CoeffPolynomial truncated(int max_grade) const {
    CoeffPolynomial p;
    for (const auto& [m, c] : terms_)
      if (grade(m) <= max_grade) p.terms_[m] = c;
    return p;
  }

  CoeffPolynomial& operator+=(const CoeffPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  CoeffPolynomial& operator-=(const CoeffPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend CoeffPolynomial operator+(CoeffPolynomial a, const CoeffPolynomial& b) { return a += b; }
  friend CoeffPolynomial operator-(CoeffPolynomial a, const CoeffPolynomial& b) { return a -= b; }
  friend CoeffPolynomial operator-(const CoeffPolynomial& a) { return CoeffPolynomial() - a; }

  friend CoeffPolynomial operator*(const CoeffPolynomial& a, const CoeffPolynomial& b) {
    return multiply(a, b, -1);
  }
  CoeffPolynomial& operator*=(const CoeffPolynomial& b) { return *this = *this * b; }

  /// Product keeping only terms of grade <= max_grade (no cap if negative).
  static CoeffPolynomial multiply(const CoeffPolynomial& a, const CoeffPolynomial& b, int max_grade) {
    CoeffPolynomial p;
    for (const auto& [ma, ca] : a.terms_) {
      const int ga = grade(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (max_grade >= 0 && ga + grade(mb) > max_grade) continue;
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        p.add(m, ca * cb);
      }
    }
    return p;
  }

  friend bool operator==(const CoeffPolynomial& a, const CoeffPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CoeffPolynomial& a, const CoeffPolynomial& b) { return !(a == b); }

  /// Partial derivative with respect to variable k.
  CoeffPolynomial derivative(int k) const {
    CoeffPolynomial p;
    for (const auto& [m, c] : terms_) {
      if (static_cast<int>(m.size()) < k || m[k - 1] == 0) continue;
      Monomial d = m;
      const int e = d[k - 1]--;
      trim(d);
      p.add(d, c * F(e));
    }
    return p;
  }

  /// Value at numeric arguments; values[k - 1] is variable k.
  template <class V>
  V evaluate(const std::vector<V>& values) const {
    V s = V(0);
    for (const auto& [m, c] : terms_) {
      if (m.size() > values.size()) throw DomainError("CoeffPolynomial::evaluate: missing variable");
      V t;
      if constexpr (std::is_same_v<V, F>)
        t = c;
      else
        t = static_cast<V>(to_double(c));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t *= values[i];
      s += t;
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const CoeffPolynomial& p) { return os << p.str(); }

  std::string str(const std::string& var = "f_-") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) os << "*" << var << (i + 1) << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return os.str();
  }

 private:
  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  void add(Monomial m, const F& c) {
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!virasoro::is_zero(c)) terms_.emplace(std::move(m), c);
      return;
    }
    it->second = it->second + c;
    if (virasoro::is_zero(it->second)) terms_.erase(it);
  }

  std::map<Monomial, F> terms_;
};

template <class F>
CoeffPolynomial<F> operator*(const F& s, const CoeffPolynomial<F>& p) {
  return CoeffPolynomial<F>(s) * p;
}

/// Scalar field underlying a coefficient ring.
template <class R>
struct ScalarOf {
  using type = R;
};
template <class F>
struct ScalarOf<CoeffPolynomial<F>> {
  using type = F;
};
template <>
struct ScalarOf<Polynomial> {
  using type = Rational;
};

}  // namespace slelab::virasoro
