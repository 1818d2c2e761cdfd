#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "slelab/cli/config.hpp"
#include "slelab/virasoro.hpp"

namespace slelab::cli {

namespace vir = slelab::virasoro;

/// "8/3", "-2", "3.25" or "1e-1" read as an exact rational.
inline vir::Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty rational");
  const auto bad = [&] { return ConfigError("cannot read '" + text + "' as an exact rational"); };
  try {
    if (text.find_first_of(".eE") == std::string::npos) return vir::Rational(text);
    std::string mant = text, expo = "0";
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
      mant = text.substr(0, e);
      expo = text.substr(e + 1);
    }
    int scale = std::stoi(expo);
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
      scale -= static_cast<int>(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+") throw bad();
    if (mant[0] == '+') mant.erase(0, 1);
    vir::Rational r(mant);
    vir::Rational ten(10);
    for (int i = 0; i < std::abs(scale); ++i) r = scale > 0 ? r * ten : r / ten;
    return r;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

namespace detail {

inline double max_abs(const vir::VermaVector<vir::Rational>& v) {
  double m = 0.0;
  for (const auto& [p, x] : v.terms()) m = std::max(m, std::abs(vir::to_double(x)));
  return m;
}

inline double max_abs(const std::vector<vir::Rational>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(vir::to_double(x)));
  return m;
}

inline json check_record(const std::string& name, const std::string& params, double residual, bool pass) {
  json j;
  j["check"] = name;
  j["parameters"] = params;
  j["residual"] = std::isfinite(residual) ? json(residual) : json(nullptr);
  j["pass"] = pass;
  return j;
}

}  // namespace detail

/// The algebraic identity suite at an exact kappa: null vector, Kac determinant, SLE generator,
/// Virasoro relations in the Verma module and on coefficient polynomials, martingale
/// subspace, conjugation by G_f, and diffusion eigenvalues. Exact checks report residual 0
/// exactly when they pass; the annular eigenvalue is a floating point comparison.
inline json algebra_checks(const vir::Rational& kappa, int grade, double p, int trunc) {
  using vir::Rational;
  using Poly = vir::CoeffPolynomial<Rational>;
  if (kappa <= 0) throw DomainError("virasoro-check: kappa must be positive");
  if (grade < 1 || grade > 10) throw DomainError("virasoro-check: grade must lie in [1, 10]");
  const std::string ks = "kappa=" + kappa.str();
  const Rational h = vir::weight_h12(kappa), c = vir::central_charge_of(kappa);
  const Rational h0half = (4 - (kappa - 4) * (kappa - 4)) / (16 * kappa);
  json out = json::array();

  {
    const auto r = vir::null_vector_level2(kappa);
    out.push_back(detail::check_record("null_vector_level2", ks, std::max(detail::max_abs(r.l1), detail::max_abs(r.l2)),
                                       r.pass));
    out.push_back(detail::check_record("kac_determinant_level2", ks, std::abs(vir::to_double(r.gram_determinant)),
                                       r.gram_determinant == 0));
    out.push_back(detail::check_record("null_vector_in_radical", ks, detail::max_abs(r.gram_times_vector),
                                       vir::detail::all_zero(r.gram_times_vector)));
  }
  {
    const auto r = vir::null_vector_level2(vir::RationalFunction::kappa());
    out.push_back(detail::check_record("null_vector_level2_symbolic", "kappa symbolic", r.pass ? 0.0 : INFINITY, r.pass));
  }
  {
    const auto r = vir::sle_generator_check(kappa, 4);
    out.push_back(detail::check_record("sle_generator_drift_null", ks + ", max_level=4", detail::max_abs(r.residual),
                                       r.pass));
  }
  {
    // deterministic dense vector at levels <= 4; two raising modes reach level 10
    vir::VermaModule<Rational> mod(c, h, 10);
    vir::VermaVector<Rational> v;
    for (std::size_t i = 0; i < mod.level_offset(5); ++i)
      v.add(mod.basis(i), Rational(static_cast<long>(i % 7) - 3) / Rational(static_cast<long>(1 + i % 4)));
    double worst = 0.0;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) worst = std::max(worst, detail::max_abs(vir::commutator_residual(mod, a, b, v)));
    out.push_back(detail::check_record("verma_commutators", ks + ", a,b in [-3,3], level <= 4", worst, worst == 0.0));
  }
  {
    // coefficient-polynomial representations on every monomial of grade <= 4
    const int M = 10;
    std::vector<Poly> polys{Poly(Rational(1))};
    for (int g = 1; g <= 4; ++g)
      for (const auto& part : vir::partitions(g)) {
        Poly m(Rational(1));
        for (int k : part) m = m * Poly::variable(k);
        polys.push_back(m);
      }
    std::vector<vir::CoeffOperator<Rational>> s, r;
    for (int n = 1; n <= 4; ++n) s.push_back(vir::s_operator<Rational>(n, M));
    for (int n = -3; n <= 3; ++n) r.push_back(vir::r_operator<Rational>(n, c, h, M));
    bool s_ok = true, r_ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; n + m <= 4; ++m)
        for (const auto& q : polys)
          if (s[n - 1](s[m - 1](q)) - s[m - 1](s[n - 1](q)) != Poly(Rational(n - m)) * s[n + m - 1](q)) s_ok = false;
    for (int n = -3; n <= 3; ++n)
      for (int m = -3; m <= 3; ++m) {
        if (std::abs(n + m) > 3) continue;
        const Rational central = n + m == 0 ? c / 12 * n * (n * n - 1) : Rational(0);
        const auto& Rn = r[n + 3];
        const auto& Rm = r[m + 3];
        for (const auto& q : polys)
          if (Rn(Rm(q)) - Rm(Rn(q)) != Poly(Rational(n - m)) * r[n + m + 3](q) + Poly(central) * q) r_ok = false;
      }
    out.push_back(detail::check_record("s_operator_witt_brackets", "n,m >= 1, n+m <= 4, grade <= 4", s_ok ? 0.0 : 1.0, s_ok));
    out.push_back(detail::check_record("r_operator_virasoro_brackets", ks + ", n,m in [-3,3], grade <= 4",
                                       r_ok ? 0.0 : 1.0, r_ok));
  }
  {
    const auto r = vir::martingale_subspace_check(kappa, grade);
    std::int64_t bad = 0;
    for (const auto& im : r.images) bad += !im.is_zero();
    out.push_back(detail::check_record("martingale_subspace", ks + ", grade=" + std::to_string(grade) + ", elements=" +
                                                                  std::to_string(r.elements.size()),
                                       static_cast<double>(bad), r.pass));
  }
  {
    vir::VermaModule<Rational> mod(c, h, 4);
    bool ok = true;
    for (int m = -2; m <= 2; ++m) ok = ok && vir::gf_conjugate_mode(m, mod, 3).agrees;
    out.push_back(detail::check_record("gf_conjugation", ks + ", m in [-2,2], grade <= 3", ok ? 0.0 : 1.0, ok));
  }
  {
    const auto rad = vir::diffusion_eigenvalue<Rational>(vir::Radial{}, kappa);
    const Rational dr = rad.eigenvalue - 8 * h0half;
    out.push_back(detail::check_record("radial_eigenvalue", ks + ", expected 8 h_{0;1/2}",
                                       std::max(std::abs(vir::to_double(dr)), rad.residual_norm), rad.pass && dr == 0));
    const auto dip = vir::diffusion_eigenvalue<Rational>(vir::Dipolar{}, kappa);
    const Rational dd = dip.eigenvalue + 8 * h0half;
    out.push_back(detail::check_record("dipolar_eigenvalue", ks + ", expected -8 h_{0;1/2}",
                                       std::max(std::abs(vir::to_double(dd)), dip.residual_norm), dip.pass && dd == 0));
  }
  {
    const double k = vir::to_double(kappa);
    const auto an = vir::diffusion_eigenvalue<double>(vir::Annular{p, trunc}, k);
    double sum = 0.0;
    for (int m = 1; m <= trunc; ++m) sum += std::pow(std::sinh(m * p), -2.0);
    const double expected = 2.0 * vir::to_double(h0half) - vir::to_double(h) * sum;
    const double res = std::max(std::abs(an.eigenvalue - expected), an.residual_norm);
    char buf[96];
    std::snprintf(buf, sizeof buf, ", p=%.17g, M=%d", p, trunc);
    out.push_back(detail::check_record("annular_eigenvalue", ks + buf, res, an.pass && res < 1e-12));
  }
  return out;
}

}  // namespace slelab::cli
