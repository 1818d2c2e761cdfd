#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "slelab/analytic/probabilities.hpp"
#include "slelab/estimators/core.hpp"
#include "slelab/estimators/race.hpp"
#include "slelab/loewner/chordal.hpp"

namespace slelab::estimators {

struct RestrictionOptions {
  double refine = 0.5;        // split a segment longer than this fraction of its distance to the tip
  double hit_ratio = 1e-5;    // dist(tip, image) / diam(image) below this counts as a hit
  double far_ratio = 1e-5;    // (r0 / X0)^2 of an enclosing half-disc below this counts as avoided
  double min_gap = 1e-13;     // smallest parameter spacing between nodes
  std::int64_t max_steps = 50000000;
};

namespace detail {

/// Point of the hull boundary at parameter s in [0, 1]; both ends of the arc lie on
/// the real axis for a half-disc, the slit runs from its base to its tip.
inline cplx hull_boundary(const analytic::HullSpec& hull, double s) {
  if (auto* d = std::get_if<analytic::SemiDisk>(&hull)) return d->x + std::polar(d->r, pi * (1.0 - s));
  const auto& sl = std::get<analytic::VerticalSlit>(hull);
  return {sl.x, sl.h * s};
}

inline double hull_distance(const analytic::HullSpec& hull) {
  if (auto* d = std::get_if<analytic::SemiDisk>(&hull)) return std::abs(d->x) - d->r;
  return std::abs(std::get<analytic::VerticalSlit>(hull).x);
}

inline double segment_distance(cplx a, cplx b) {
  const cplx ab = b - a;
  const double L2 = std::norm(ab);
  double u = L2 > 0.0 ? -(std::conj(ab) * a).real() / L2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(a + u * ab);
}

struct RestrictionRun {
  int outcome;  // 1 avoided, 0 hit, -1 censored
  std::int64_t steps;
  std::size_t max_nodes;
};

/// One kappa = 8/3 run: the image of the hull boundary under f_t - xi_t is kept as an
/// adaptively refined polyline. New nodes are pushed through the recorded history of
/// steps, so every node is an exact image of a boundary point under the discrete flow.
class HullImage {
 public:
  HullImage(const analytic::HullSpec& hull, double kappa, double dt, std::uint64_t seed,
            const RestrictionOptions& opt)
      : hull_(hull), opt_(opt), ell0_(hull_distance(hull)), ell_(ell0_), ds_(dt / (ell0_ * ell0_)),
        kick_(seed, kappa, ds_) {
    for (int i = 0; i <= 16; ++i) {
      const double s = i / 16.0;
      nodes_.push_back({s, hull_boundary(hull_, s) / ell_});
    }
  }

  RestrictionRun run(double horizon) {
    std::size_t max_nodes = 0;
    measure();
    for (std::int64_t k = 0;; ++k) {
      refine();
      if (k % 8 == 0) coarsen();
      max_nodes = std::max(max_nodes, nodes_.size());
      const int v = verdict();
      if (v >= 0) return {v, k, max_nodes};
      if (t_ >= horizon || k >= opt_.max_steps) return {-1, k, max_nodes};
      Step st{kick_(), kick_(), 0};
      if (!apply(st)) return {0, k, max_nodes};
      measure();
      st.rescale = renormalise();
      history_.push_back(st);
      t_ += ds_ * ell_ * ell_;
    }
  }

 private:
  struct Node {
    double s;
    cplx f;
  };
  struct Step {
    double d1, d2;
    int rescale;  // power of two applied to stored coordinates after the step
  };

  static cplx advance(cplx f, const Step& st, double ds) {
    f -= st.d1;
    f = loewner::chordal::slit(f, ds);
    f -= st.d2;
    return std::ldexp(1.0, st.rescale) * f;
  }

  /// Returns false if a real end point crossed the driver (the curve reached the tip).
  bool apply(const Step& st) {
    for (auto& n : nodes_) {
      const bool real = n.f.imag() == 0.0;
      const double side = n.f.real();
      n.f -= st.d1;
      if (real && (n.f.real() > 0.0) != (side > 0.0)) return false;
      n.f = loewner::chordal::slit(n.f, ds_);
      const double side2 = n.f.real();
      n.f -= st.d2;
      if (real && (n.f.real() > 0.0) != (side2 > 0.0)) return false;
    }
    return true;
  }

  /// Distances from the tip to every segment, and their minimum.
  void measure() {
    seg_.resize(nodes_.size() - 1);
    dist_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      seg_[i] = segment_distance(nodes_[i].f, nodes_[i + 1].f);
      dist_ = std::min(dist_, seg_[i]);
    }
  }

  int renormalise() {
    double d = dist_;
    int p = 0;
    while (d >= 2.0) {
      d *= 0.5;
      --p;
    }
    while (d < 1.0) {
      d *= 2.0;
      ++p;
    }
    if (p != 0) {
      const double f = std::ldexp(1.0, p);
      for (auto& n : nodes_) n.f *= f;
      for (auto& g : seg_) g *= f;
      dist_ *= f;
      ell_ /= f;
    }
    return p;
  }

  cplx replay(double s) const {
    cplx f = hull_boundary(hull_, s) / ell0_;
    for (const auto& st : history_) f = advance(f, st, ds_);
    return f;
  }

  void refine() {
    for (std::size_t i = 0; i + 1 < nodes_.size();) {
      const Node& a = nodes_[i];
      const Node& b = nodes_[i + 1];
      if (std::abs(b.f - a.f) > opt_.refine * seg_[i] && b.s - a.s > opt_.min_gap) {
        const double s = 0.5 * (a.s + b.s);
        const cplx f = replay(s);
        nodes_.insert(nodes_.begin() + i + 1, Node{s, f});
        seg_[i] = segment_distance(nodes_[i].f, f);
        seg_.insert(seg_.begin() + i + 1, segment_distance(f, nodes_[i + 2].f));
        dist_ = std::min({dist_, seg_[i], seg_[i + 1]});
        continue;
      }
      ++i;
    }
  }

  /// Drops interior nodes whose neighbours are close enough to be joined directly.
  void coarsen() {
    bool changed = false;
    for (std::size_t i = 1; i + 1 < nodes_.size();) {
      const cplx a = nodes_[i - 1].f, b = nodes_[i + 1].f;
      if (std::abs(b - a) < 0.1 * opt_.refine * segment_distance(a, b)) {
        nodes_.erase(nodes_.begin() + i);
        changed = true;
        continue;
      }
      ++i;
    }
    if (changed) measure();
  }

  /// 0 hit, 1 avoided, -1 undecided.
  int verdict() const {
    double re_lo = nodes_[0].f.real(), re_hi = re_lo, im_hi = 0.0;
    for (const auto& n : nodes_) {
      re_lo = std::min(re_lo, n.f.real());
      re_hi = std::max(re_hi, n.f.real());
      im_hi = std::max(im_hi, n.f.imag());
    }
    if (dist_ < opt_.hit_ratio * std::hypot(re_hi - re_lo, im_hi)) return 0;
    const double X0 = 0.5 * (re_lo + re_hi);
    // Cheap rejection before the exact enclosing radius.
    const double box = std::hypot(0.5 * (re_hi - re_lo), im_hi);
    if (box * box > 4.0 * opt_.far_ratio * X0 * X0) return -1;
    double r0 = 0.0;
    for (const auto& n : nodes_) r0 = std::max(r0, std::abs(n.f - X0));
    if (r0 < std::abs(X0) && (r0 / X0) * (r0 / X0) < opt_.far_ratio) return 1;
    return -1;
  }

  analytic::HullSpec hull_;
  RestrictionOptions opt_;
  double ell0_, ell_, ds_;
  HalfKicks kick_;
  double t_ = 0.0;
  std::vector<Node> nodes_;
  std::vector<Step> history_;
  std::vector<double> seg_;
  double dist_ = 0.0;
};

}  // namespace detail

/// P[the kappa = 8/3 trace avoids the hull].
///
/// The meta field "far_bias_bound" is the largest possible contribution of runs declared
/// avoided while the hull image was still at finite distance: such an image fits in a
/// half-disc with (r0/X0)^2 < far_ratio, which is hit with probability at most
/// 1 - (1 - far_ratio)^{5/8}.
inline Estimate mc_restriction(const analytic::HullSpec& hull, const MCConfig& cfg,
                               const RestrictionOptions& opt = {}) {
  analytic::validate(hull);
  constexpr double kappa = 8.0 / 3.0;
  const auto runs = run_samples<detail::RestrictionRun>(cfg, [&](std::size_t, std::uint64_t seed) {
    return detail::HullImage(hull, kappa, cfg.dt, seed, opt).run(cfg.horizon);
  });
  std::vector<double> v;
  double steps = 0.0;
  std::size_t nodes = 0;
  for (const auto& r : runs) {
    v.push_back(r.outcome < 0 ? detail::censored : r.outcome);
    steps += r.steps;
    nodes = std::max(nodes, r.max_nodes);
  }
  Estimate e = detail::censored_estimate(v, "P[trace avoids hull]");
  e.meta["kappa"] = "8/3";
  e.meta["far_bias_bound"] = std::to_string(1.0 - std::pow(1.0 - opt.far_ratio, 5.0 / 8.0));
  e.meta["mean_steps"] = std::to_string(steps / runs.size());
  e.meta["max_nodes"] = std::to_string(nodes);
  return e;
}

}  // namespace slelab::estimators
