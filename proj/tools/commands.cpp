#include "commands.hpp"

#include "xxff/luttinger/appendix_quadrature.hpp"
#include "xxff/luttinger/gamma_factors.hpp"
#include "xxff/luttinger/prefactors.hpp"
#include "xxff/luttinger/resummation.hpp"
#include "xxff/luttinger/scaling.hpp"
#include "xxff/numerics/formal_series.hpp"
#include "xxff/numerics/special_functions.hpp"
#include "xxff/toeplitz/asymptotic_series.hpp"
#include "xxff/toeplitz/cauchy_product.hpp"
#include "xxff/toeplitz/residual_report.hpp"
#include "xxff/toeplitz/toeplitz_oracle.hpp"
#include "xxff/xxchain/ed_oracle.hpp"
#include "xxff/xxchain/finite_correlator.hpp"
#include "xxff/xxchain/formfactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#ifndef XXFF_VERSION
#define XXFF_VERSION "0.0.0"
#endif

namespace xxff::cli {
namespace {

constexpr double kPi = std::numbers::pi;
using P = Provenance;

std::string str(int v) { return std::to_string(v); }
std::string num(double v) { return format_double(v); }

// log10|r| without overflow, through mpz_get_d_2exp.
double log10_abs(const BigRational& r) {
  if (r == 0) return -INFINITY;
  long en = 0, ed = 0;
  const double mn = std::fabs(mpz_get_d_2exp(&en, r.get_num_mpz_t()));
  const double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::log10(mn / md) + static_cast<double>(en - ed) * std::log10(2.0);
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

const std::vector<int> kSweep{64, 128, 256, 512};

// Taylor coefficients of (1 - z)^{-e}.
std::vector<BigRational> taylor_coefficients(const BigRational& e, int n) {
  return series_binomial_pow(BigRational{-e}, static_cast<std::size_t>(n + 1), "z").coefficients();
}

}  // namespace

Report cmd_constants() {
  Report r;
  const auto& c = constants();
  const double a = c.a();
  const double g4 = std::pow(c.barnesGHalf, 4);
  r.tables.push_back({"constants",
                      {"name", "value"},
                      {{"A", num(a)},
                       {"lnA", num(c.lnA)},
                       {"zeta'(-1)", num(c.zetaPrimeMinus1)},
                       {"G(1/2)", num(c.barnesGHalf)},
                       {"C0", num(c.c0)},
                       {"C0/(2 sqrt(pi))", num(c.c0 / (2.0 * std::sqrt(kPi)))},
                       {"C0/sqrt(pi)", num(c.c0_over_sqrt_pi())},
                       {"A^2/sqrt(2)", num(a * a / std::sqrt(2.0))}}});
  r.check_abs("constants.A", 0.6450024, a, 1e-6, P::Paper);
  r.check_abs("constants.C0/(2 sqrt(pi))", 0.147088, c.c0 / (2.0 * std::sqrt(kPi)), 1e-5, P::Paper);
  r.check_abs("constants.A^2 - pi G(1/2)^4", 0.0, a * a - kPi * g4, 1e-6, P::Derived);
  r.check_rel("constants.A^2/sqrt(2) vs C0/sqrt(pi)", c.c0_over_sqrt_pi(), a * a / std::sqrt(2.0), 1e-6,
              P::Derived);
  return r;
}

Report cmd_prefactors(int m_max) {
  Report r;
  Table t{"prefactors", {"m", "C_m", "log10_abs_C_m", "y_m", "y_m_exact", "log10_abs_y_m"}, {}};
  for (int m = 0; m <= m_max; ++m) {
    const auto cl = luttinger::prefactor_C_log(m);
    const double log10c = cl.log_abs / std::log(10.0);
    if (m == 0) {
      t.rows.push_back({str(m), num(luttinger::prefactor_C(0)), num(log10c), "1", "1", "0"});
      continue;
    }
    const auto yl = luttinger::coefficient_y_log(m);
    const BigRational ye = luttinger::coefficient_y_exact(m);
    t.rows.push_back({str(m), num(luttinger::prefactor_C(m)), num(log10c), num(luttinger::coefficient_y(m)),
                      xxff::to_string(ye), num(yl.log_abs / std::log(10.0))});
    const int expected_sign = m % 2 == 0 ? 1 : -1;
    const int exact_sign = sgn(ye);
    r.check("prefactors.y_" + str(m) + ".sign", str(expected_sign), str(exact_sign),
            exact_sign == expected_sign && yl.sign == expected_sign && std::isfinite(yl.log_abs), P::Derived);
    r.check_abs("prefactors.y_" + str(m) + ".log10 numeric vs exact", log10_abs(ye),
                yl.log_abs / std::log(10.0), 1e-10 * std::max(1.0, std::fabs(log10_abs(ye))), P::Derived);
  }
  r.tables.push_back(std::move(t));
  r.check_exact("prefactors.y_1", make_rational(-1, 8), luttinger::coefficient_y_exact(1), P::Paper);
  r.check_exact("prefactors.y_2", make_rational(9, 32768), luttinger::coefficient_y_exact(2), P::Paper);
  r.check_abs("prefactors.y_1 numeric", -0.125, luttinger::coefficient_y(1), 1e-14, P::Paper);
  r.check_abs("prefactors.y_2 numeric", 9.0 / 32768.0, luttinger::coefficient_y(2), 1e-16, P::Paper);
  return r;
}

Report cmd_formfactor(int L, int m_max, bool golden) {
  Report r;
  if (golden) {
    std::vector<int> sizes;
    for (int n = 4; n <= L; n += 2) sizes.push_back(n);
    Table t{"golden", {"L", "M", "state_id", "abs2"}, {}};
    std::map<std::pair<int, int>, double> totals;
    for (const auto& row : xxchain::ed_golden_table(sizes)) {
      t.rows.push_back({str(row.L), str(row.M), row.state_id, num(row.abs2)});
      totals[{row.L, row.M}] += row.abs2;
    }
    r.tables.push_back(std::move(t));
    for (const auto& [key, total] : totals) {
      r.check_abs("golden.L" + str(key.first) + ".M" + str(key.second) + ".sum abs2 = M/L",
                  static_cast<double>(key.second) / key.first, total, 1e-12, P::Derived);
    }
    return r;
  }

  if (L <= 8) {
    for (int M = 1; M <= L; ++M) {
      const auto cmp = xxchain::compare_with_ed(L, M);
      const std::string tag = "formfactor.ed.L" + str(L) + ".M" + str(M);
      r.check_abs(tag + ".max ||psi| - |psi_ED||", 0.0, cmp.max_abs_deviation, 1e-10, P::Derived);
      r.check_abs(tag + ".completeness", 0.0, cmp.max_completeness_error_formula, 1e-12, P::Derived);
    }
  }
  Table t{"scaling", {"L", "m", "abs2", "scaled", "predicted", "relative_deviation"}, {}};
  const xxchain::ChainSpec spec{L, L / 2};
  for (int m = 0; m <= m_max && 2 * m < L / 4; ++m) {
    const auto pt = luttinger::scaling_relation_check(spec, m);
    const auto parts = xxchain::shifted_ground_parts(spec, m);
    t.rows.push_back({str(L), str(m), num(std::exp(2.0 * parts.log_abs)), num(pt.scaled), num(pt.predicted),
                      num(pt.relative_deviation)});
    if (L >= 16) {
      r.check_abs("formfactor.scaling.L" + str(L) + ".m" + str(m) + ".relative deviation <= 1/L", 0.0,
                  pt.relative_deviation, 1.0 / L, P::Derived);
    }
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_series(int order) {
  Report r;
  const int k_max = order / 2 + 1;
  const auto log_series = toeplitz::log_R_series(k_max);
  Table lt{"log_R_series", {"power_of_1/N", "coefficient"}, {}};
  for (int p = 2; p <= 2 * (k_max - 1); p += 2) {
    lt.rows.push_back({str(p), xxff::to_string(log_series.series.coeff(static_cast<std::size_t>(p)))});
  }
  r.tables.push_back(std::move(lt));
  r.check_exact("series.logR.N^-2", make_rational(-1, 64), log_series.series.coeff(2), P::Derived);
  if (k_max >= 3) r.check_exact("series.logR.N^-4", make_rational(1, 256), log_series.series.coeff(4), P::Derived);

  const auto e = toeplitz::exact_expansion(order);
  for (const auto& [p, c] : e.uniform_terms) {
    r.coefficients.push_back({"uniform", p, c.get_num().get_str(), c.get_den().get_str(),
                              toeplitz::AsymptoticExpansion::is_extrapolated(p)});
  }
  for (const auto& [p, c] : e.staggered_terms) {
    r.coefficients.push_back({"staggered", p, c.get_num().get_str(), c.get_den().get_str(),
                              toeplitz::AsymptoticExpansion::is_extrapolated(p)});
  }

  r.check_exact("series.uniform[0]", 1, e.uniform_terms.at(0), P::Trivial);
  r.check_exact("series.uniform[2]", 0, e.uniform_terms.at(2), P::Paper);
  const std::vector<std::tuple<const char*, int, BigRational>> pinned{
      {"staggered", 2, make_rational(-1, 8)},       {"uniform", 4, make_rational(1, 128)},
      {"staggered", 4, make_rational(1, 8)},        {"uniform", 6, make_rational(-1, 64)},
      {"staggered", 6, make_rational(-363, 1024)},  {"uniform", 8, make_rational(1707, 32768)},
      {"staggered", 8, make_rational(1985, 1024)}};
  for (const auto& [parity, p, value] : pinned) {
    if (p > order) continue;
    const auto& map = std::string(parity) == "uniform" ? e.uniform_terms : e.staggered_terms;
    r.check_exact("series." + std::string(parity) + "[" + str(p) + "]", value, map.at(p), P::Paper);
  }

  bool recombines = true;
  for (int p = 0; p <= order; ++p) {
    const auto k = static_cast<std::size_t>(p);
    recombines = recombines && e.recombined(p, 0) == e.even_branch.coeff(k) &&
                 e.recombined(p, 1) == e.odd_branch.coeff(k);
  }
  r.check("series.parity split recombines both branches", "true", recombines ? "true" : "false", recombines,
          P::Derived);
  const double a = constants().a();
  r.check_rel("series.prefactor A^2/sqrt(2) = C0/sqrt(pi)", e.prefactor, a * a / std::sqrt(2.0), 1e-6,
              P::Derived);
  return r;
}

Report cmd_exact(int x_max, int order) {
  Report r;
  const auto table = toeplitz::exact_G_table(std::max(x_max, 512));
  const auto e = toeplitz::exact_expansion(order);
  Table t{"exact", {"x", "exact_G", "toeplitz_det_G", "series_G", "series_relative_residual"}, {}};
  for (int x = 1; x <= x_max; ++x) {
    const double g = table[static_cast<std::size_t>(x - 1)];
    const double s = e.evaluate(x);
    t.rows.push_back({str(x), num(g), x <= 32 ? num(toeplitz::toeplitz_oracle_G(x)) : "", num(s),
                      num((s - g) / g)});
  }
  r.tables.push_back(std::move(t));

  r.check_abs("exact.R_0", 1.0, toeplitz::cauchy_R(0), 0.0, P::Trivial);
  r.check_rel("exact.R_1 = 2/pi", 2.0 / kPi, toeplitz::cauchy_R(1), 1e-15, P::Trivial);
  r.check_rel("exact.R_2 = 16/(3 pi^2)", 16.0 / (3.0 * kPi * kPi), toeplitz::cauchy_R(2), 1e-15, P::Derived);
  r.check_rel("exact.G(1) = 1/pi", 1.0 / kPi, toeplitz::exact_G(1), 1e-15, P::Derived);
  r.check_rel("exact.G(2) = 2/pi^2", 2.0 / (kPi * kPi), toeplitz::exact_G(2), 1e-15, P::Derived);
  r.check_rel("exact.G(4) = 128/(9 pi^4)", 128.0 / (9.0 * std::pow(kPi, 4)), toeplitz::exact_G(4), 1e-14,
              P::Derived);

  double worst = 0.0;
  for (int N = 0; N <= 12; ++N) {
    worst = std::max(worst, std::fabs(toeplitz::cauchy_R(N) / toeplitz::toeplitz_oracle_R(N) - 1.0));
  }
  r.check_abs("exact.max_{N<=12} |R_N / det_N - 1|", 0.0, worst, 1e-9, P::Derived);
  r.check_rel("exact.R_6 vs determinant from quadrature coefficients", toeplitz::cauchy_R(6),
              toeplitz::toeplitz_oracle_R(6, 1 << 14), 1e-8, P::Derived);
  worst = 0.0;
  for (int x = 1; x <= 32; ++x) {
    worst = std::max(worst, std::fabs(toeplitz::exact_G(x) / toeplitz::toeplitz_oracle_G(x) - 1.0));
  }
  r.check_abs("exact.max_{x<=32} |G(x) / (det M / 2) - 1|", 0.0, worst, 1e-9, P::Derived);

  const auto ls = toeplitz::log_R_series(8);
  r.check_abs("exact.ln R_64 - (lnA - ln64/4 + S(64))", 0.0, toeplitz::log_cauchy_R(64) - ls.evaluate(64.0),
              1e-12, P::Derived);

  bool monotone = table.front() > 0.0;
  for (std::size_t i = 1; i < table.size(); ++i) monotone = monotone && table[i] > 0.0 && table[i] < table[i - 1];
  r.check("exact.G positive and strictly decreasing on [1, 512]", "true", monotone ? "true" : "false", monotone,
          P::Derived);

  if (order >= 8) {
    double branch = 0.0;
    for (int x = 64; x <= 512; ++x) {
      const double g = table[static_cast<std::size_t>(x - 1)];
      branch = std::max(branch, std::fabs(e.evaluate(x) / g - 1.0));
    }
    r.check_abs("exact.max_{64<=x<=512} |series / G - 1|", 0.0, branch, 1e-10, P::Derived);
    r.check_abs("exact.series at x=64", 0.0, e.evaluate(64) / table[63] - 1.0, 1e-12, P::Derived);
  }
  return r;
}

Report cmd_sum_identity(int cutoff) {
  Report r;
  const double phi = 0.6 * kPi;
  Table t{"sum_identity",
          {"branch", "exponent", "damping", "cutoff", "partial_re", "partial_im", "closed_re", "closed_im", "error"},
          {}};
  struct Case {
    luttinger::Branch branch;
    double e;
    const char* name;
  };
  const Case cases[] = {{luttinger::Branch::Right, -0.5, "right"}, {luttinger::Branch::Left, 0.5, "left"}};
  for (const auto& c : cases) {
    for (double damping : {1.0, 0.5}) {
      const auto rows = luttinger::sum_identity_convergence(c.e, phi, cutoff, c.branch, damping);
      for (const auto& row : rows) {
        t.rows.push_back({c.name, num(c.e), num(damping), str(row.cutoff), num(row.partial_sum.real()),
                          num(row.partial_sum.imag()), num(row.closed_form.real()), num(row.closed_form.imag()),
                          num(row.error)});
      }
      const std::string tag = std::string("sum_identity.") + c.name +
                              (damping == 1.0 ? ".unit circle" : ".abel r=1/2") + ".cutoff " + str(cutoff);
      r.check_abs(tag, 0.0, rows.back().error, 1e-6, P::Derived);
    }
  }
  r.tables.push_back(std::move(t));

  r.check_abs("sum_identity.cutoff 0", 0.0,
              std::abs(luttinger::sum_identity_partial(-0.5, phi, 0) - std::complex<double>(1.0)), 0.0,
              P::Trivial);
  r.check_abs("sum_identity.cutoff 1 = 1 + e^{i phi}/4", 0.0,
              std::abs(luttinger::sum_identity_partial(-0.5, phi, 1) - (1.0 + 0.25 * std::polar(1.0, phi))), 1e-15,
              P::Derived);

  const BigRational quarter = make_rational(1, 4);
  const auto taylor = taylor_coefficients(quarter, 6);
  const auto right = luttinger::level_aggregates_exact(make_rational(-1, 2), 6, luttinger::Branch::Right);
  const auto left = luttinger::level_aggregates_exact(make_rational(1, 2), 6, luttinger::Branch::Left);
  for (int k = 0; k <= 6; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    r.check_exact("sum_identity.right level " + str(k) + " aggregate", taylor[kk], right[kk], P::Derived);
    r.check_exact("sum_identity.left level " + str(k) + " aggregate", taylor[kk], left[kk], P::Derived);
  }
  return r;
}

Report cmd_compare(int x_max, int m_max, int order) {
  Report r;
  const auto xs = range(32, x_max);
  const auto rep = toeplitz::series_residual_report(xs, m_max, order);
  Table t{"compare", {"x", "exact_G", "luttinger_G", "series_G", "exact_minus_luttinger", "series_relative_residual"}, {}};
  for (const auto& row : rep.rows) {
    t.rows.push_back({str(row.x), num(row.exact), num(row.luttinger), num(row.series), num(row.luttinger_residual),
                      num(row.series_relative_residual)});
  }
  r.tables.push_back(std::move(t));

  const auto e = toeplitz::exact_expansion(order);
  r.check_exact("compare.staggered x^-2: exact = y_1", luttinger::coefficient_y_exact(1), e.staggered_terms.at(2),
                P::Paper);
  r.check_exact("compare.uniform x^-2: exact = Luttinger = 0", 0, e.uniform_terms.at(2), P::Paper);
  const bool only_exact = e.uniform_terms.at(4) == make_rational(1, 128);
  r.check("compare.uniform x^-4 present only on the exact side", "1/128 vs none", xxff::to_string(e.uniform_terms.at(4)),
          only_exact, P::Paper);

  const double expected = m_max == 0 ? 2.5 : 4.5;
  r.check_abs("compare.fitted residual exponent m_max=" + str(m_max), expected, rep.fitted_exponent, 0.1,
              P::Derived);
  for (int m : {0, 1}) {
    if (m == m_max) continue;
    const auto other = toeplitz::series_residual_report(xs, m, order);
    r.check_abs("compare.fitted residual exponent m_max=" + str(m), m == 0 ? 2.5 : 4.5, other.fitted_exponent, 0.1,
                P::Derived);
  }
  return r;
}

Report cmd_verify(const std::string& level) {
  Report r;
  // Identities that hold for empty input.
  r.check_abs("verify.trivial.R_0", 1.0, toeplitz::cauchy_R(0), 0.0, P::Trivial);
  r.check_abs("verify.trivial.F(empty config)", 1.0,
              luttinger::cauchy_determinant_factor({}, {}, luttinger::Branch::Right, -0.5), 0.0, P::Trivial);
  r.check_abs("verify.trivial.sum identity cutoff 0", 1.0, luttinger::sum_identity_partial(-0.5, 1.0, 0).real(),
              0.0, P::Trivial);

  r.append(cmd_constants());
  r.append(cmd_prefactors(10));
  r.append(cmd_series(8));
  r.append(cmd_exact(64, 8));
  r.append(cmd_sum_identity(20));
  r.append(cmd_compare(512, 1, 8));
  for (int L : {4, 6, 8}) r.append(cmd_formfactor(L, 0, false));
  r.tables.clear();

  // Appendix integrals against the Gamma closed forms.
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    for (double a : {-0.5, -0.25}) {
      worst = std::max(worst, std::fabs(luttinger::appendix_integral_fplus(k, a) - luttinger::f_plus_right(k, a)));
      worst = std::max(worst, std::fabs(luttinger::appendix_integral_fminus(1 - k, a) -
                                        luttinger::f_minus_right(1 - k, a)));
    }
    for (double c : {0.5, 0.25}) {
      worst = std::max(worst, std::fabs(luttinger::appendix_integral_fplus_left(-k, c) -
                                        luttinger::f_plus_left(-k, c)));
      worst = std::max(worst, std::fabs(luttinger::appendix_integral_fminus_left(k - 1, c) -
                                        luttinger::f_minus_left(k - 1, c)));
    }
  }
  r.check_abs("verify.appendix integrals max deviation", 0.0, worst, 1e-8, P::Derived);

  // Branch duality: reflecting every offset maps the right branch at a onto
  // the left branch at c = -a (a = -1/2, c = 1/2 at m = 0).
  bool dual = true;
  for (double a : {-0.5, -0.25, 0.5}) {
    for (int p = 1; p <= 4; ++p) {
      for (int q = 0; q >= -3; --q) {
        const std::vector<int> pr{p}, qr{q}, pl{-p}, ql{-q};
        const double fr = luttinger::cauchy_determinant_factor(pr, qr, luttinger::Branch::Right, a);
        const double fl = luttinger::cauchy_determinant_factor(pl, ql, luttinger::Branch::Left, -a);
        dual = dual && std::fabs(fr - fl) <= 1e-14 * std::max(1.0, std::fabs(fr));
      }
    }
  }
  r.check("verify.branch duality F_a(p,q) = F_c(-p,-q) at c = -a", "true", dual ? "true" : "false", dual,
          P::Derived);
  bool plumbing = true;
  const luttinger::LuttingerParams params;
  for (int m = 0; m <= 5; ++m) plumbing = plumbing && params.a(m) == m - 0.5 && params.c(m) == m + 0.5;
  r.check("verify.xi=1 exponents a = m - 1/2, c = m + 1/2", "true", plumbing ? "true" : "false", plumbing,
          P::Trivial);

  // Finite-size convergence towards the Luttinger predictions.
  for (int m = 0; m <= 2; ++m) {
    const auto conv = luttinger::scaling_convergence(m, kSweep);
    bool decreasing = true;
    for (std::size_t i = 1; i < conv.deviations.size(); ++i) decreasing = decreasing && conv.deviations[i] < conv.deviations[i - 1];
    r.check("verify.scaling m=" + str(m) + " deviation decreasing, slope <= -0.85", "<= -0.85",
            num(conv.fitted_slope), decreasing && conv.fitted_slope <= -0.85, P::Derived);
  }
  for (int m = 0; m <= 2; ++m) {
    for (auto [p, q] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, -1}}) {
      ParticleHoleConfig cfg;
      cfg.m = m;
      cfg.right = {{p}, {q}};
      const auto conv = luttinger::particle_hole_convergence(cfg, kSweep);
      r.check_abs("verify.particle-hole m=" + str(m) + " (" + str(p) + "," + str(q) + ") slope", -1.0,
                  conv.fitted_slope, 0.15, P::Derived);
    }
  }

  if (level == "full") {
    double dev = 0.0;
    const xxchain::ChainSpec spec{2048, 1024};
    for (int x = 1; x <= 32; ++x) {
      dev = std::max(dev, std::fabs(xxchain::finite_correlator(spec, x) / toeplitz::exact_G(x) - 1.0));
    }
    r.check_abs("verify.full.finite L=2048 vs thermodynamic G, x<=32", 0.0, dev, 2.5e-4, P::Derived);
    r.append(cmd_formfactor(64, 2, false));
    r.append(cmd_formfactor(512, 2, false));
    r.tables.clear();
  }
  return r;
}

Report run(const RunConfig& cfg) {
  auto positive = [](const std::optional<int>& v, int fallback, const char* flag) {
    const int value = v.value_or(fallback);
    if (value <= 0) throw UsageError(std::string(flag) + " must be positive");
    return value;
  };
  auto even_order = [&](int fallback) {
    const int order = positive(cfg.order, fallback, "--order");
    if (order % 2 != 0 || order < 4 || order > 40) throw UsageError("--order must be even and in [4, 40]");
    return order;
  };
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
  if (cfg.cutoff && *cfg.cutoff < 0) throw UsageError("--cutoff must be non-negative");
  if (cfg.m_max && *cfg.m_max < 0) throw UsageError("--m-max must be non-negative");

  Report r;
  const std::string& c = cfg.command;
  if (c == "constants") {
    r = cmd_constants();
  } else if (c == "prefactors") {
    const int m_max = cfg.m_max.value_or(10);
    if (m_max > 20) throw UsageError("--m-max must be <= 20");
    r = cmd_prefactors(m_max);
  } else if (c == "formfactor") {
    const int L = positive(cfg.L, 8, "--L");
    if (L % 2 != 0 || L < 4) throw UsageError("--L must be even and >= 4");
    if (cfg.golden && L > 8) throw UsageError("--golden requires --L <= 8");
    r = cmd_formfactor(L, cfg.m_max.value_or(2), cfg.golden);
  } else if (c == "series") {
    r = cmd_series(even_order(8));
  } else if (c == "exact") {
    r = cmd_exact(positive(cfg.x_max, 64, "--x-max"), even_order(8));
  } else if (c == "sum-identity") {
    const int cutoff = cfg.cutoff.value_or(20);
    if (cutoff > 40) throw UsageError("--cutoff must be <= 40");
    r = cmd_sum_identity(cutoff);
  } else if (c == "compare") {
    const int x_max = positive(cfg.x_max, 512, "--x-max");
    if (x_max < 32) throw UsageError("--x-max must be >= 32");
    r = cmd_compare(x_max, cfg.m_max.value_or(1), even_order(8));
  } else if (c == "verify") {
    if (cfg.level != "quick" && cfg.level != "full") throw UsageError("verify level must be quick or full");
    r = cmd_verify(cfg.level);
  } else {
    throw UsageError("unknown command: " + c);
  }
  r.command = cfg.echo.empty() ? c : cfg.echo;
  r.version = XXFF_VERSION;
  return r;
}

}  // namespace xxff::cli
