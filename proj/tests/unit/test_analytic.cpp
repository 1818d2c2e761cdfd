#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "slelab/analytic.hpp"

using namespace slelab;
using namespace slelab::analytic;
using Q = boost::multiprecision::mpq_rational;

namespace {

// Raw integral with the sigma^{-4/kappa} endpoint left in place; tanh-sinh copes with it.
double same_swallow_oracle(double x, double X, double kappa) {
  const double s = x / X;
  boost::math::quadrature::tanh_sinh<double> ts;
  const double I = ts.integrate([&](double sg) {
    return std::pow(sg, -4.0 / kappa) * std::pow(1.0 - s * sg, 2.0 * (4.0 - kappa) / kappa);
  }, 0.0, 1.0);
  return std::pow(s, (kappa - 4.0) / kappa) * std::tgamma(4.0 / kappa) /
         (std::tgamma((kappa - 4.0) / kappa) * std::tgamma((8.0 - kappa) / kappa)) * I;
}

// The null-vector equation integrates once to phi' ~ (u (1 - u))^{-4/kappa},
// so the normalised solution is a regularised incomplete beta function.
double cardy_oracle(double a, double b, double kappa) {
  const double u = a / (a - b);
  const double e = 1.0 - 4.0 / kappa;
  return 1.0 - boost::math::ibeta(e, e, u);
}

}  // namespace

TEST(CFT, PercolationValues) {
  const auto p = cft_params(Q(6));
  EXPECT_EQ(p.c, Q(0));
  EXPECT_EQ(p.h12(), Q(0));
  EXPECT_EQ(p.h13(), Q(1, 3));
}

TEST(CFT, RestrictionWeight) {
  const auto p = cft_params(Q(8, 3));
  EXPECT_EQ(p.h12(), Q(5, 8));
  EXPECT_EQ(p.c, Q(0));
}

TEST(CFT, WeightTableIdentitiesExact) {
  for (int num = 1; num <= 40; ++num) {
    const Q k(num, 3);
    const auto p = cft_params(k);
    EXPECT_EQ(p.h12(), (Q(6) - k) / (Q(2) * k));
    EXPECT_EQ(p.h13(), (Q(8) - k) / k);
    EXPECT_EQ(Q(2) * p.h01(), (Q(8) - k) / Q(8));
    EXPECT_EQ(Q(8) * p.h0half(), (k - Q(2)) * (Q(6) - k) / (Q(2) * k));
    EXPECT_EQ(central_charge(k), central_charge_alt(k));
    EXPECT_EQ(p.c, p.h12() * (Q(3) * k - Q(8)));
  }
}

TEST(CFT, CentralChargeFormsAgreeInDoubles) {
  for (double k = 0.1; k <= 16.0; k += 0.01)
    EXPECT_NEAR(central_charge(k), central_charge_alt(k), 1e-14 * std::max(1.0, std::abs(central_charge(k))));
}

TEST(CFT, RejectsNonPositiveKappa) {
  EXPECT_THROW(cft_params(0.0), DomainError);
  EXPECT_THROW(cft_params(-1.0), DomainError);
}

TEST(SameSwallow, MatchesRawIntegral) {
  for (double kappa : {4.5, 5.0, 6.0, 7.0, 7.5})
    for (double s : {0.01, 0.1, 0.3, 0.5, 0.8, 0.95})
      EXPECT_NEAR(same_swallow_probability(s, 1.0, kappa), same_swallow_oracle(s, 1.0, kappa), 1e-9)
          << kappa << " " << s;
}

TEST(SameSwallow, PercolationHalf) {
  // At kappa = 6 and s = 1/2 the value is exactly 1/2.
  EXPECT_NEAR(same_swallow_probability(1.0, 2.0, 6.0), 0.5, 1e-12);
}

TEST(SameSwallow, Limits) {
  EXPECT_NEAR(same_swallow_probability(1.0 - 1e-9, 1.0, 6.0), 1.0, 1e-3);
  EXPECT_LT(same_swallow_probability(1e-9, 1.0, 6.0), 1e-2);
  // Power law s^{(kappa-4)/kappa} as s -> 0.
  const double r = same_swallow_probability(1e-6, 1.0, 6.0) / same_swallow_probability(1e-8, 1.0, 6.0);
  EXPECT_NEAR(std::log(r) / std::log(100.0), 1.0 / 3.0, 1e-4);
}

TEST(SameSwallow, DecreasingInX) {
  for (double kappa : {5.0, 6.0, 7.0}) {
    double prev = 1.0;
    for (double X = 1.05; X < 20; X *= 1.3) {
      const double v = same_swallow_probability(1.0, X, kappa);
      EXPECT_LT(v, prev);
      EXPECT_GE(v, 0.0);
      prev = v;
    }
  }
}

TEST(SameSwallow, ScaleInvariant) {
  EXPECT_NEAR(same_swallow_probability(0.3, 0.7, 5.5), same_swallow_probability(3.0, 7.0, 5.5), 1e-14);
}

TEST(SameSwallow, DomainErrors) {
  EXPECT_THROW(same_swallow_probability(1, 2, 4.0), DomainError);
  EXPECT_THROW(same_swallow_probability(1, 2, 8.0), DomainError);
  EXPECT_THROW(same_swallow_probability(2, 1, 6.0), DomainError);
}

TEST(Cardy, SymmetricIsHalf) {
  for (double kappa : {4.2, 5.0, 6.0, 7.9}) EXPECT_NEAR(cardy_probability(-2.0, 2.0, kappa), 0.5, 1e-12);
}

TEST(Cardy, MatchesIntegratedForm) {
  for (double kappa : {4.5, 6.0, 7.5})
    for (double a : {-0.01, -0.3, -1.0, -3.0, -50.0})
      EXPECT_NEAR(cardy_probability(a, 1.0, kappa), cardy_oracle(a, 1.0, kappa), 1e-9) << kappa << " " << a;
}

TEST(Cardy, PercolationReference) {
  EXPECT_NEAR(cardy_probability(-1.0, 3.0, 6.0), 0.62645, 5e-5);
}

TEST(Cardy, Reflection) {
  for (double kappa : {4.5, 6.0, 7.5})
    for (double a : {-0.1, -0.7, -4.0})
      for (double b : {0.2, 1.0, 9.0})
        EXPECT_NEAR(cardy_probability(a, b, kappa) + cardy_probability(-b, -a, kappa), 1.0, 1e-8);
}

TEST(Cardy, Limits) {
  EXPECT_GT(cardy_probability(-1e-8, 1.0, 6.0), 0.99);
  EXPECT_LT(cardy_probability(-1e8, 1.0, 6.0), 0.01);
  EXPECT_THROW(cardy_probability(1.0, 2.0, 6.0), DomainError);
  EXPECT_THROW(cardy_probability(-1.0, 2.0, 3.0), DomainError);
}

TEST(Restriction, ClosedForms) {
  EXPECT_NEAR(restriction_probability(SemiDisk{2.0, 1.0}), std::pow(0.75, 5.0 / 8.0), 1e-15);
  EXPECT_NEAR(restriction_probability(SemiDisk{2.0, 1.0}), 0.8354362, 1e-7);
  EXPECT_NEAR(restriction_probability(VerticalSlit{1.0, 1.0}), std::pow(0.5, 5.0 / 16.0), 1e-15);
  EXPECT_NEAR(restriction_probability(VerticalSlit{1.0, 1.0}), 0.8052452, 1e-7);
  EXPECT_NEAR(restriction_probability(SemiDisk{-3.0, 1e-6}), 1.0, 1e-12);
}

TEST(Restriction, MonotoneInHullSize) {
  double prev = 1.0;
  for (double r = 0.1; r < 1.95; r += 0.1) {
    const double v = restriction_probability(SemiDisk{2.0, r});
    EXPECT_LT(v, prev);
    EXPECT_GT(v, 0.0);
    prev = v;
  }
  prev = 1.0;
  for (double h = 0.1; h < 10; h *= 1.5) {
    const double v = restriction_probability(VerticalSlit{-1.0, h});
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Restriction, HullMapNormalisation) {
  for (const HullSpec& hull : {HullSpec{SemiDisk{2.0, 1.0}}, HullSpec{VerticalSlit{-1.5, 0.7}}}) {
    EXPECT_LT(std::abs(hull_map(hull, 0.0).first), 1e-14);
    // f(z) - z tends to a real constant at infinity.
    const cplx big(1e7, 3e6);
    const cplx d1 = hull_map(hull, big).first - big, d2 = hull_map(hull, 2.0 * big).first - 2.0 * big;
    EXPECT_LT(std::abs(d1 - d2), 1e-6);
    EXPECT_LT(std::abs(d1.imag()), 1e-6);
    // Boundary of the hull lands on the real axis.
    const cplx edge = std::holds_alternative<SemiDisk>(hull) ? cplx(2.0, 0.0) + std::polar(1.0, 1.0)
                                                              : cplx(-1.5, 0.3);
    EXPECT_LT(std::abs(hull_map(hull, edge).first.imag()), 1e-12);
  }
}

TEST(Restriction, RejectsInvalidHull) {
  EXPECT_THROW(restriction_probability(SemiDisk{1.0, 1.5}), DomainError);
  EXPECT_THROW(restriction_probability(VerticalSlit{0.0, 1.0}), DomainError);
}

TEST(OnePoint, ImaginaryAxisAndHomogeneity) {
  for (double kappa : {2.0, 8.0 / 3.0, 6.0}) {
    EXPECT_NEAR(one_point_function(cplx(0, 1.7), kappa), std::pow(3.4, -(8.0 - kappa) / 8.0), 1e-14);
    const cplx z(0.4, 0.3);
    const double lam = 2.5;
    EXPECT_NEAR(one_point_function(lam * z, kappa),
                std::pow(lam, -(8.0 - kappa) / 8.0) * one_point_function(z, kappa), 1e-13);
  }
  EXPECT_NEAR(one_point_function(cplx(-3.0, 0.01), 8.0 - 1e-12), 1.0, 1e-9);
}

TEST(FractalDimension, Values) {
  EXPECT_DOUBLE_EQ(fractal_dimension(8.0 / 3.0), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(fractal_dimension(6.0), 7.0 / 4.0);
  EXPECT_DOUBLE_EQ(fractal_dimension(12.0), 2.0);
}
