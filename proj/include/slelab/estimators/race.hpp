#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include <boost/random/normal_distribution.hpp>

#include "slelab/common.hpp"
#include "slelab/loewner/chordal.hpp"

namespace slelab::estimators {

/// Thresholds of the renormalised chordal engines.
struct RaceOptions {
  double delta_swallow = 1e-10;  // nearest point below this fraction of the next scale is swallowed
  double delta_merge = 1e-12;    // relative gap below which two same-side points move as one
  std::int64_t max_steps = 200000000;
};

namespace detail {

/// Brownian half-increments for a Strang step of stored length ds.
struct HalfKicks {
  std::mt19937_64 rng;
  boost::random::normal_distribution<double> normal{0.0, 1.0};  // ziggurat
  double sd;
  HalfKicks(std::uint64_t seed, double kappa, double ds) : rng(mix64(seed)), sd(std::sqrt(0.5 * kappa * ds)) {}
  double operator()() { return sd * normal(rng); }
};

}  // namespace detail

/// Chordal SLE acting on marked real points, seen through f_t - xi_t.
///
/// Coordinates are stored in units of `ell`, which is rescaled by powers of two so the
/// nearest live point stays in [1, 2). One step is a Strang splitting: half the Brownian
/// increment, the exact slit flow for stored time ds, the other half. The stored time step is
/// fixed, so physical time advances by ds * ell^2 per step.
class RealRace {
 public:
  enum class Kind { Swallow, Merge, Exhausted, Censored };
  struct Event {
    Kind kind;
    std::vector<int> points;  // Swallow: the whole group; Merge: {inner, outer}
  };

  RealRace(const std::vector<double>& x, double kappa, double dt, double horizon, std::uint64_t seed,
           const RaceOptions& opt = {})
      : horizon_(horizon), opt_(opt), n_(x.size()) {
    if (x.empty() || x.size() > max_points) throw DomainError("RealRace: between 1 and 16 marked points");
    double m = std::numeric_limits<double>::infinity();
    for (double xi : x) {
      if (!(xi != 0.0) || !std::isfinite(xi)) throw DomainError("RealRace: marked points must be finite and nonzero");
      m = std::min(m, std::abs(xi));
    }
    ell_ = m;
    ds_ = dt / (m * m);
    kicks_.emplace(seed, kappa, ds_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      v_.push_back(x[i] / ell_);
      dv_.push_back(1.0);
      state_.push_back(Live);
      group_.push_back({static_cast<int>(i)});
    }
  }

  double time() const { return t_; }
  std::int64_t steps() const { return steps_; }
  bool alive(int i) const { return state_[i] == Live; }
  /// Current f_t(x_i) - xi_t and f_t'(x_i) for a live point.
  double value(int i) const { return v_[i] * ell_; }
  double derivative(int i) const { return dv_[i]; }

  Event next() {
    for (;;) {
      if (!pending_.empty()) {
        Event e = pending_.front();
        pending_.erase(pending_.begin());
        return e;
      }
      if (live_count() == 0) return {Kind::Exhausted, {}};
      if (!decide()) {
        if (pending_.empty()) return {Kind::Exhausted, {}};
        continue;
      }
      if (!pending_.empty()) continue;
      if (t_ >= horizon_ || steps_ >= opt_.max_steps) return {Kind::Censored, {}};
      step();
      renormalise();
    }
  }

 private:
  enum State { Live, Gone, Follower };
  static constexpr std::size_t max_points = 16;

  std::size_t live_count() const {
    std::size_t k = 0;
    for (auto s : state_) k += s == Live;
    return k;
  }

  /// A shift that carries points across the driver swallows them all at once.
  void shift(double d) {
    std::array<bool, max_points> flipped{};
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (state_[i] != Live) continue;
      const double before = v_[i];
      v_[i] -= d;
      flipped[i] = (before > 0.0) != (v_[i] > 0.0);
      any |= flipped[i];
    }
    if (!any) return;
    std::vector<int> crossed;
    for (std::size_t i = 0; i < n_; ++i)
      if (flipped[i]) crossed.push_back(static_cast<int>(i));
    swallow(crossed);
  }

  void step() {
    shift((*kicks_)());
    for (std::size_t i = 0; i < n_; ++i) {
      if (state_[i] != Live) continue;
      const double w = loewner::chordal::slit(v_[i], ds_);
      dv_[i] *= v_[i] / w;
      v_[i] = w;
    }
    shift((*kicks_)());
    t_ += ds_ * ell_ * ell_;
    ++steps_;
  }

  void renormalise() {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i)
      if (state_[i] == Live) m = std::min(m, std::abs(v_[i]));
    if (!std::isfinite(m)) return;
    while (m >= 2.0) {
      m *= 0.5;
      scale(0.5);
    }
    while (m < 1.0) {
      m *= 2.0;
      scale(2.0);
    }
  }

  void scale(double s) {
    for (std::size_t i = 0; i < n_; ++i)
      if (state_[i] == Live) v_[i] *= s;
    ell_ /= s;
  }

  void swallow(const std::vector<int>& heads) {
    Event e{Kind::Swallow, {}};
    for (int i : heads)
      for (int j : group_[i]) {
        state_[j] = Gone;
        e.points.push_back(j);
      }
    std::sort(e.points.begin(), e.points.end());
    pending_.push_back(e);
  }

  /// Live points on one side ordered outward from the driver (insertion sort; n is tiny).
  std::size_t side(bool positive, std::array<int, max_points>& idx) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (state_[i] != Live || (v_[i] > 0.0) != positive) continue;
      std::size_t j = k++;
      while (j > 0 && std::abs(v_[idx[j - 1]]) > std::abs(v_[i])) {
        idx[j] = idx[j - 1];
        --j;
      }
      idx[j] = static_cast<int>(i);
    }
    return k;
  }

  /// Applies merge and swallow rules. Returns false if no live point has a reference scale.
  bool decide() {
    std::array<int, max_points> pos, neg;
    const std::size_t np = side(true, pos), nn = side(false, neg);
    bool any_reference = false;
    for (int s = 0; s < 2; ++s) {
      const auto& me = s == 0 ? pos : neg;
      const auto& other = s == 0 ? neg : pos;
      const std::size_t nm = s == 0 ? np : nn, no = s == 0 ? nn : np;
      if (nm == 0) continue;
      const double p1 = std::abs(v_[me[0]]);
      std::size_t k = 1;
      while (k < nm && p1 / std::abs(v_[me[k]]) > 1.0 - opt_.delta_merge) {
        state_[me[k]] = Follower;
        for (int j : group_[me[k]]) group_[me[0]].push_back(j);
        pending_.push_back({Kind::Merge, {me[0], me[k]}});
        ++k;
      }
      double ref = std::numeric_limits<double>::infinity();
      if (k < nm) ref = std::abs(v_[me[k]]);
      if (no > 0) ref = std::min(ref, std::abs(v_[other[0]]));
      if (!std::isfinite(ref)) continue;
      any_reference = true;
      if (p1 < opt_.delta_swallow * ref) swallow({me[0]});
    }
    return any_reference;
  }

  double horizon_;
  RaceOptions opt_;
  std::size_t n_;
  double ell_ = 1.0, ds_ = 0.0, t_ = 0.0;
  std::int64_t steps_ = 0;
  std::optional<detail::HalfKicks> kicks_;
  std::vector<double> v_, dv_;
  std::vector<State> state_;
  std::vector<std::vector<int>> group_;
  std::vector<Event> pending_;
};

}  // namespace slelab::estimators
