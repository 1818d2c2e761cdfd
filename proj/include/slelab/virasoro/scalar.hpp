#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "slelab/common.hpp"

namespace slelab::virasoro {

// Expression templates off: values are freely captured with auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Dense univariate polynomial with rational coefficients (lowest degree first).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int v) : Polynomial(Rational(v)) {}
  Polynomial(const Rational& v) {
    if (v != 0) c_.push_back(v);
  }
  explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("Polynomial: division by zero");
    std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
    std::vector<Rational> r = a.c_;
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Rational t = r[k + b.degree()] / b.lead();
      q[k] = t;
      for (int j = 0; j <= b.degree(); ++j) r[k + j] -= t * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) a = a * Polynomial(Rational(1) / a.lead());
    return a;
  }

  std::string str(const std::string& var = "k") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Element of Q(kappa), kept in lowest terms with a monic denominator so that equality
/// is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(int v) : num_(v), den_(1) {}
  RationalFunction(const Rational& v) : num_(v), den_(1) {}
  RationalFunction(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) { normalise(); }

  static RationalFunction kappa() { return {Polynomial::variable(), Polynomial(1)}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator()(const Rational& k) const {
    const Rational d = den_(k);
    if (d == 0) throw DomainError("RationalFunction: pole");
    return num_(k) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("RationalFunction: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << "[" << r.num_.str() << "] / [" << r.den_.str() << "]";
  }

 private:
  void normalise() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
    const Rational l = den_.lead();
    num_ = num_ * Polynomial(Rational(1) / l);
    den_ = den_ * Polynomial(Rational(1) / l);
  }
  Polynomial num_, den_;
};

/// Uniform access for the three scalar types used by the algebra layer.
template <class F>
bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, RationalFunction>) return x.is_zero();
  else return x == F(0);
}

template <class F>
double to_double(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) return x.template convert_to<double>();
  else if constexpr (std::is_same_v<F, double>) return x;
  else throw DomainError("to_double: symbolic scalar");
}

template <class F>
std::string to_string(const F& x) {
  std::ostringstream os;
  if constexpr (std::is_same_v<F, double>) os.precision(17);
  os << x;
  return os.str();
}

}  // namespace slelab::virasoro
