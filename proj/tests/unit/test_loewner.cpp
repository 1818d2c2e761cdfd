#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "slelab/loewner.hpp"

using namespace slelab;
using namespace slelab::loewner;

namespace {

cplx sqrt_upper(cplx q) {
  cplx r = std::sqrt(q);
  return r.imag() < 0 ? -r : r;
}

}  // namespace

TEST(Driver, ZeroKappaGivesZeroPath) {
  const Driver d = sample_driver(0.0, 1e-3, 100, 7);
  for (double v : d.values) EXPECT_EQ(v, 0.0);
}

TEST(Driver, StartsAtZeroAndIsDeterministic) {
  const Driver a = sample_driver(6.0, 1e-3, 500, 42);
  const Driver b = sample_driver(6.0, 1e-3, 500, 42);
  const Driver c = sample_driver(6.0, 1e-3, 500, 43);
  EXPECT_EQ(a.values[0], 0.0);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
}

TEST(Driver, TerminalVarianceMatchesKappaT) {
  const int n = 10000;
  double s = 0, s2 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_driver(6.0, 0.01, 100, split_seed(1, i)).values.back();
    s += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  const double m2 = s2 / n;
  const double se = std::sqrt((s4 / n - m2 * m2) / n);
  EXPECT_NEAR(m2, 6.0, 3 * se);
}

TEST(Driver, ConstantDriverKeepsValue) {
  const Driver d = constant_driver(0.3, 0.1, 5);
  for (double v : d.values) EXPECT_EQ(v, 0.3);
}

TEST(Chordal, ClosedFormAtThreeI) {
  const Driver d = constant_driver(0.0, 1e-3, 1000);
  const auto ev = evolve_point(Geometry::chordal(), d, cplx(0, 3));
  EXPECT_NEAR(std::abs(ev.w.back() - cplx(0, std::sqrt(5.0))), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(ev.dw.back() - 3.0 / std::sqrt(5.0)), 0.0, 1e-8);
  EXPECT_EQ(ev.w[0], cplx(0, 3));
  EXPECT_EQ(ev.dw[0], cplx(1.0));
}

TEST(Chordal, ClosedFormGrid) {
  const Driver d = constant_driver(0.0, 1e-3, 1000);
  double worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const cplx z(-2.0 + 0.4 * i, 0.5 + 0.3 * j);
      const auto ev = evolve_point(Geometry::chordal(), d, z);
      const double tau = ev.swallow_time.value_or(1e9);
      for (std::size_t k = 0; k < ev.w.size(); k += 100)
        if (ev.times[k] < tau - 1e-3) worst = std::max(worst, std::abs(ev.w[k] - sqrt_upper(z * z + 4.0 * ev.times[k])));
    }
  EXPECT_LT(worst, 1e-8);
}

TEST(Chordal, SwallowTimeOnTheSlit) {
  const Driver d = constant_driver(0.0, 1e-3, 1000);
  const auto ev = evolve_point(Geometry::chordal(), d, cplx(0, 1));
  ASSERT_TRUE(ev.swallow_time.has_value());
  EXPECT_FALSE(ev.alive);
  EXPECT_NEAR(*ev.swallow_time, 0.25, 1e-12);
}

TEST(Chordal, StaysInUpperHalfPlaneWhileAlive) {
  const Driver d = sample_driver(6.0, 1e-3, 2000, 5);
  const auto ev = evolve_point(Geometry::chordal(), d, cplx(0.3, 0.4));
  for (std::size_t k = 0; k + (ev.alive ? 0 : 1) < ev.w.size(); ++k) EXPECT_GT(ev.w[k].imag(), 0.0);
}

TEST(Chordal, ScalingCovariance) {
  const Driver d = sample_driver(6.0, 1e-3, 1000, 11);
  const double lam = 3.0;
  std::vector<double> scaled(d.values);
  for (double& v : scaled) v *= lam;
  const Driver ds = path_driver(lam * lam * d.dt, scaled, 6.0);
  const cplx z0(0.2, 1.5);
  const auto a = evolve_point(Geometry::chordal(), d, z0);
  const auto b = evolve_point(Geometry::chordal(), ds, lam * z0);
  ASSERT_EQ(a.w.size(), b.w.size());
  for (std::size_t k = 0; k < a.w.size(); ++k) {
    EXPECT_NEAR(std::abs(b.w[k] - lam * a.w[k]), 0.0, 1e-9 * lam);
    EXPECT_NEAR(std::abs(b.dw[k] - a.dw[k]), 0.0, 1e-9);
  }
}

TEST(Chordal, RealPointsSwallowedInOrder) {
  for (int s = 0; s < 40; ++s) {
    const Driver d = sample_driver(6.0, 1e-3, 3000, 100 + s);
    double prev = 0.0;
    for (double x : {0.1, 0.2, 0.3, 0.5, 0.8}) {
      const auto ev = evolve_point(Geometry::chordal(), d, cplx(x, 0));
      const double tau = ev.swallow_time.value_or(std::numeric_limits<double>::infinity());
      EXPECT_GE(tau, prev);
      prev = tau;
    }
  }
}

TEST(Chordal, Deterministic) {
  const Driver d = sample_driver(4.0, 1e-3, 500, 9);
  const auto a = evolve_point(Geometry::chordal(), d, cplx(0.5, 0.5));
  const auto b = evolve_point(Geometry::chordal(), d, cplx(0.5, 0.5));
  EXPECT_EQ(a.w, b.w);
  EXPECT_EQ(a.dw, b.dw);
}

TEST(Dipolar, ClosedFormGrid) {
  const Driver d = constant_driver(0.0, 1e-2, 100);
  double worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const cplx z(-1.5 + 0.3 * i, 0.3 + 0.25 * j);
      const auto ev = evolve_point(Geometry::dipolar(), d, z);
      for (std::size_t k = 0; k < ev.w.size(); ++k) {
        const double e = std::exp(-4.0 * ev.times[k]);
        worst = std::max(worst, std::abs(ev.w[k] - sqrt_upper(e * z * z + 1.0 - e)));
      }
    }
  EXPECT_LT(worst, 1e-8);
}

TEST(Dipolar, FixedPoints) {
  const Driver d = sample_driver(6.0, 1e-2, 100, 3);
  for (double x : {-1.0, 1.0}) {
    const auto ev = evolve_point(Geometry::dipolar(), d, cplx(x, 0));
    for (const cplx& w : ev.w) EXPECT_NEAR(std::abs(w - x), 0.0, 1e-12);
  }
}

TEST(Radial, CentreIsFixed) {
  const Driver d = sample_driver(3.0, 1e-2, 100, 4);
  const auto ev = evolve_point(Geometry::radial(), d, cplx(0, 1));
  for (const cplx& w : ev.w) EXPECT_NEAR(std::abs(w - cplx(0, 1)), 0.0, 1e-12);
}

TEST(Radial, ImaginaryAxisClosedForm) {
  const Driver d = constant_driver(0.0, 1e-2, 50);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double y = 0.9 + 0.02 * i;
    if (std::abs(y - 1.0) < 1e-12) continue;
    const auto ev = evolve_point(Geometry::radial(), d, cplx(0, y));
    for (std::size_t k = 0; k < ev.w.size(); ++k) {
      const double q = 1.0 - std::exp(4.0 * ev.times[k]) * (1.0 - y * y);
      if (q <= 1e-6) break;
      worst = std::max(worst, std::abs(ev.w[k] - cplx(0, std::sqrt(q))));
    }
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Annular, LargeModulusMatchesDiskRadialField) {
  for (double re : {-0.5, 0.1, 0.6})
    for (double xi : {0.0, 0.7}) {
      const cplx g(re, 0.3);
      const auto a = field::annular(g, xi, 20.0 - 0.05, 40);
      const auto r = field::disk_radial(g, xi);
      EXPECT_LT(std::abs(a.v - r.v), 1e-12);
    }
}

TEST(Annular, RejectsHorizonBeyondModulus) {
  const Driver d = constant_driver(0.0, 0.1, 10);
  EXPECT_THROW(evolve_point(Geometry::annular(0.5), d, cplx(0.0, 0.8)), AnnularTimeExceeded);
}

TEST(Annular, DerivativeTransportMatchesFiniteDifference) {
  const Driver d = sample_driver(2.0, 0.01, 50, 8);
  const auto geo = Geometry::annular(2.0);
  const cplx z0(0.2, 0.5), h(1e-6, 0.0);
  const auto a = evolve_point(geo, d, z0);
  const auto b = evolve_point(geo, d, z0 + h);
  const auto c = evolve_point(geo, d, z0 - h);
  const cplx fd = (b.w.back() - c.w.back()) / (2.0 * h);
  EXPECT_LT(std::abs(fd - a.dw.back()), 1e-6);
}

TEST(Trace, ChordalVerticalSlit) {
  const Driver d = constant_driver(0.0, 1e-3, 1000);
  const Trace tr = trace(Geometry::chordal(), d);
  EXPECT_EQ(tr.points[0], cplx(0.0));
  for (std::size_t k = 0; k < tr.points.size(); ++k)
    EXPECT_NEAR(std::abs(tr.points[k] - cplx(0, 2 * std::sqrt(tr.times[k]))), 0.0, 1e-9);
}

TEST(Trace, ChordalTipMapsToDriver) {
  const Driver d = sample_driver(2.0, 1e-3, 400, 21);
  const Trace tr = trace(Geometry::chordal(), d);
  // Points of the trace slightly off the curve are mapped close to the tip.
  EXPECT_GT(tr.points.back().imag(), 0.0);
  for (const cplx& z : tr.points) EXPECT_TRUE(std::isfinite(z.real()) && std::isfinite(z.imag()));
}

TEST(Trace, DipolarConstantDriverIsSemicircle) {
  const double xi = 0.4;
  const Driver d = constant_driver(xi, 1e-2, 200);
  const Trace tr = trace(Geometry::dipolar(), d);
  const double a = std::tanh(xi), b = 1.0 / std::tanh(xi);
  const cplx centre(0.5 * (a + b), 0.0);
  const double radius = 0.5 * (b - a);
  EXPECT_NEAR(std::abs(tr.points[0] - a), 0.0, 1e-14);
  for (const cplx& z : tr.points) EXPECT_NEAR(std::abs(z - centre), radius, 1e-9);
  EXPECT_GT(tr.points.back().real(), tr.points[10].real());
}

TEST(Trace, RadialStartsAtOneAndHeadsToCentre) {
  const Driver d = constant_driver(0.0, 1e-2, 100);
  const Trace tr = trace(Geometry::radial(), d);
  EXPECT_NEAR(std::abs(tr.points[0] - 1.0), 0.0, 1e-14);
  // Driver 0: the trace is the segment from 1 toward 0 along the real diameter.
  for (std::size_t k = 1; k < tr.points.size(); ++k) {
    EXPECT_LT(std::abs(tr.points[k].imag()), 1e-6);
    EXPECT_LT(tr.points[k].real(), tr.points[k - 1].real());
  }
}

TEST(Trace, EmergencePoints) {
  const Driver d = sample_driver(3.0, 1e-2, 20, 2);
  EXPECT_EQ(trace(Geometry::chordal(), d).points[0], cplx(0.0));
  EXPECT_EQ(trace(Geometry::dipolar(), d).points[0], cplx(0.0));
  EXPECT_NEAR(std::abs(trace(Geometry::radial(), d).points[0] - 1.0), 0.0, 1e-15);
}

TEST(Radius, ClosedFormOnImaginaryAxis) {
  const Driver d = constant_driver(0.0, 1e-3, 200);
  const double y = 2.0;
  const auto rp = conformal_radius_process(d, cplx(0, y));
  EXPECT_DOUBLE_EQ(rp[0].rho, 2 * y);
  for (const auto& s : rp) {
    EXPECT_NEAR(s.rho, 2 * (y * y - 4 * s.t) / y, 1e-10);
    EXPECT_NEAR(s.alpha, pi, 1e-12);
  }
}

TEST(Radius, NonIncreasingAlongPaths) {
  for (int s = 0; s < 20; ++s) {
    const Driver d = sample_driver(6.0, 1e-3, 2000, 300 + s);
    const auto rp = conformal_radius_process(d, cplx(0.1, 0.5));
    for (std::size_t k = 1; k < rp.size(); ++k) EXPECT_LE(rp[k].rho, rp[k - 1].rho * (1 + 1e-12));
  }
}

TEST(Coefficients, NormalisationAndDriver) {
  const Driver d = sample_driver(6.0, 1e-3, 1000, 77);
  const auto cp = coefficient_path(d, 6);
  for (std::size_t k = 0; k < cp.times.size(); ++k) {
    EXPECT_NEAR(cp.coeffs.at(-1)[k], -d.values[k], 1e-12);
    EXPECT_NEAR(cp.coeffs.at(-2)[k], 2.0 * cp.times[k], 1e-12);
  }
}

TEST(Coefficients, ZeroDriverMatchesSquareRootSeries) {
  const Driver d = constant_driver(0.0, 1e-3, 500);
  const auto cp = coefficient_path(d, 7);
  const double t = cp.times.back();
  // sqrt(z^2 + 4t) = z (1 + 2t/z^2 - 2t^2/z^4 + 4t^3/z^6 - ...)
  EXPECT_NEAR(cp.coeffs.at(-2).back(), 2 * t, 1e-12);
  EXPECT_NEAR(cp.coeffs.at(-4).back(), -2 * t * t, 1e-12);
  EXPECT_NEAR(cp.coeffs.at(-6).back(), 4 * t * t * t, 1e-12);
  for (int m : {-1, -3, -5, -7}) EXPECT_EQ(cp.coeffs.at(m).back(), 0.0);
}

TEST(BoundaryMotion, SymmetricPointsStayPut) {
  const Driver d = constant_driver(0.0, 1e-2, 100);
  for (auto which : {AnnularBoundary::Outer, AnnularBoundary::Inner}) {
    const auto path = annular_boundary_motion(which, 2.0, d, pi, 40);
    for (const auto& [t, a] : path) EXPECT_NEAR(a, pi, 1e-12);
  }
}

TEST(BoundaryMotion, LargeModulusOuterDriftIsRadial) {
  for (double th : {0.5, 1.5, 2.5, 4.0})
    EXPECT_NEAR(annular_boundary_drift(AnnularBoundary::Outer, th, 20.0 - 0.1, 40), 1.0 / std::tan(th / 2),
                1e-12);
}

TEST(BoundaryMotion, Errors) {
  const Driver d = constant_driver(0.0, 0.1, 10);
  EXPECT_THROW(annular_boundary_motion(AnnularBoundary::Outer, 1.0, d, 1.0, 40), AnnularTimeExceeded);
  const Driver small = constant_driver(0.0, 0.001, 10);
  EXPECT_THROW(annular_boundary_motion(AnnularBoundary::Outer, 1.0, small, 0.0, 40), SingularDrift);
}

TEST(Distance, TrivialCases) {
  Trace tr{{0.0}, {cplx(0.0)}, Geometry::chordal()};
  EXPECT_DOUBLE_EQ(min_distance_to_set(tr, RealRay{1.0, true}), 1.0);
  EXPECT_DOUBLE_EQ(min_distance_to_set(tr, DipolarForbidden{}), 1.0);
  const Trace slit = trace(Geometry::chordal(), constant_driver(0.0, 1e-2, 100));
  EXPECT_DOUBLE_EQ(min_distance_to_set(slit, RealAxis{}), 0.0);
  EXPECT_NEAR(min_distance_to_set(slit, Segment{cplx(1, 0), cplx(1, 5)}), 1.0, 1e-12);
  EXPECT_NEAR(min_distance_to_set(tr, Arc{cplx(2, 0), 1.0, 0.0, pi}), 1.0, 1e-12);
}
