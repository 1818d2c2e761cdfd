#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "slelab/common.hpp"
#include "slelab/virasoro/scalar.hpp"

namespace slelab::virasoro {

/// Weakly decreasing positive parts; {l1, l2, ...} labels L_{-l1} L_{-l2} ... |h>.
using Partition = std::vector<int>;

inline int level_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

/// Partitions of n, parts in decreasing order, listed in reverse lexicographic order
/// ({n} first, {1, ..., 1} last).
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Finite combination of PBW vectors.
template <class F>
class VermaVector {
 public:
  VermaVector() = default;
  static VermaVector basis(const Partition& p, const F& coeff = F(1)) {
    VermaVector v;
    v.add(p, coeff);
    return v;
  }

  const std::map<Partition, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? F(0) : it->second;
  }
  int max_level() const {
    int l = -1;
    for (const auto& [p, c] : terms_) l = std::max(l, level_of(p));
    return l;
  }

  void add(const Partition& p, const F& c) {
    if (virasoro::is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
      return;
    }
    it->second = it->second + c;
    if (virasoro::is_zero(it->second)) terms_.erase(it);
  }
  VermaVector& operator+=(const VermaVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  VermaVector& operator-=(const VermaVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, F(0) - c);
    return *this;
  }
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const F& s, const VermaVector& v) {
    VermaVector r;
    for (const auto& [p, c] : v.terms_) r.add(p, s * c);
    return r;
  }
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ")";
      for (int k : p) s += " L_-" + std::to_string(k);
      s += " |h>";
    }
    return s;
  }

 private:
  std::map<Partition, F> terms_;
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Verma module V(c, h) truncated at level N. Mode actions are memoised, so an instance
/// is not safe for concurrent use; copies are independent.
template <class F>
class VermaModule {
 public:
  using Vector = VermaVector<F>;

  VermaModule(F c, F h, int max_level) : c_(std::move(c)), h_(std::move(h)), n_(max_level) {
    if (max_level < 0) throw DomainError("VermaModule: negative max level");
    for (int l = 0; l <= n_; ++l) {
      offset_.push_back(basis_.size());
      for (auto& p : partitions(l)) {
        index_[p] = basis_.size();
        basis_.push_back(std::move(p));
      }
    }
    offset_.push_back(basis_.size());
  }

  const F& c() const { return c_; }
  const F& h() const { return h_; }
  int max_level() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t dimension(int level) const { return offset_[level + 1] - offset_[level]; }
  std::size_t level_offset(int level) const { return offset_[level]; }
  const Partition& basis(std::size_t i) const { return basis_[i]; }
  std::size_t index(const Partition& p) const { return index_.at(p); }

  Vector highest_weight() const { return Vector::basis({}); }

  /// L_n v, normal ordered into the PBW basis.
  Vector apply_mode(int n, const Vector& v) const {
    Vector out;
    for (const auto& [p, coeff] : v.terms()) {
      if (level_of(p) - n > n_)
        throw TruncationOverflow("apply_mode: L_" + std::to_string(n) + " leaves level " + std::to_string(n_));
      out += coeff * mode_on_basis(n, p);
    }
    return out;
  }

  /// L_{w[0]} L_{w[1]} ... v (rightmost mode acts first).
  Vector apply_word(const std::vector<int>& word, Vector v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_mode(*it, v);
    return v;
  }

  /// Shapovalov form <h| L_{a_k} ... L_{a_1} L_{-b_1} ... L_{-b_m} |h>.
  F shapovalov(const Partition& a, const Partition& b) const {
    Vector v = Vector::basis(b);
    for (int k : a) v = apply_mode(k, v);
    return v.coefficient({});
  }

  Matrix<F> gram(int level) const {
    const std::size_t d = dimension(level), o = offset_[level];
    Matrix<F> g(d, std::vector<F>(d, F(0)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g[i][j] = shapovalov(basis_[o + i], basis_[o + j]);
    return g;
  }

  F gram_determinant(int level) const { return determinant(gram(level)); }

  /// Gram_l v_l for each level l, concatenated. Zero exactly when v is in the radical of
  /// the Shapovalov form, i.e. vanishes in the irreducible quotient.
  std::vector<F> radical_residual(const Vector& v) const {
    std::vector<F> out;
    for (int l = 0; l <= n_; ++l) {
      const std::size_t o = offset_[l], d = dimension(l);
      for (std::size_t i = 0; i < d; ++i) {
        F s = F(0);
        for (std::size_t j = 0; j < d; ++j) {
          const F x = v.coefficient(basis_[o + j]);
          if (!virasoro::is_zero(x)) s = s + shapovalov(basis_[o + i], basis_[o + j]) * x;
        }
        out.push_back(s);
      }
    }
    return out;
  }

  /// Matrix of L_n on the truncation (columns index sources). Columns whose image would
  /// leave the module are zero.
  Matrix<F> mode_matrix(int n) const {
    const std::size_t d = dimension();
    Matrix<F> m(d, std::vector<F>(d, F(0)));
    for (std::size_t j = 0; j < d; ++j) {
      if (level_of(basis_[j]) - n > n_ || level_of(basis_[j]) - n < 0) continue;
      for (const auto& [p, c] : mode_on_basis(n, basis_[j]).terms()) m[index_.at(p)][j] = c;
    }
    return m;
  }

  Vector from_coordinates(const std::vector<F>& x) const {
    Vector v;
    for (std::size_t i = 0; i < x.size(); ++i) v.add(basis_[i], x[i]);
    return v;
  }

 private:
  static F determinant(Matrix<F> a) {
    const std::size_t n = a.size();
    F det = F(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && virasoro::is_zero(a[piv][k])) ++piv;
      if (piv == n) return F(0);
      if (piv != k) {
        std::swap(a[piv], a[k]);
        det = F(0) - det;
      }
      det = det * a[k][k];
      for (std::size_t i = k + 1; i < n; ++i) {
        if (virasoro::is_zero(a[i][k])) continue;
        const F r = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - r * a[k][j];
      }
    }
    return det;
  }

  // L_n on a single PBW vector. Uses L_n L_{-m} = L_{-m} L_n + (n + m) L_{n-m}
  // + (c/12)(n^3 - n) delta_{n,m}, recursing on the shorter word.
  const Vector& mode_on_basis(int n, const Partition& p) const {
    auto key = std::make_pair(n, p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Vector out;
    if (p.empty()) {
      if (n < 0)
        out.add({-n}, F(1));
      else if (n == 0)
        out.add({}, h_);
    } else if (n < 0 && -n >= p.front()) {
      Partition q{-n};
      q.insert(q.end(), p.begin(), p.end());
      out.add(q, F(1));
    } else {
      const int m = p.front();
      const Partition rest(p.begin() + 1, p.end());
      for (const auto& [q, cq] : mode_on_basis(n, rest).terms()) out += cq * mode_on_basis(-m, q);
      if (n + m != 0) out += F(n + m) * mode_on_basis(n - m, rest);
      if (n == m) out += (c_ * F(n * n * n - n) / F(12)) * Vector::basis(rest);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  F c_, h_;
  int n_;
  std::vector<Partition> basis_;
  std::vector<std::size_t> offset_;
  std::map<Partition, std::size_t> index_;
  mutable std::map<std::pair<int, Partition>, Vector> memo_;
};

}  // namespace slelab::virasoro
