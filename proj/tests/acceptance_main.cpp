// Acceptance gate for the library and CLI: seven go/no-go checks, one line
// each, nonzero exit when any fails.  Tolerances are pinned here on purpose;
// loosening them is a design change, not a test fix.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hdawz/analytics.hpp"
#include "hdawz/mmse.hpp"
#include "hdawz/montecarlo.hpp"
#include "hdawz/params.hpp"
#include "hdawz/sweep.hpp"
#include "sampling_support.hpp"

namespace {

namespace fs = std::filesystem;
namespace analytics = hdawz::analytics;
namespace mc = hdawz::montecarlo;
using hdawz::ValidatedParams;
using testsupport::rel_err;

ValidatedParams reference() { return hdawz::validate(hdawz::sweep::reference_params()); }

std::string describe(const char* what, double got, double want) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

// 1. The closed forms are mutually consistent: six identities that the design
// must satisfy exactly, over randomly drawn valid designs.
std::string check_identities() {
  std::mt19937_64 rng(101);
  const double tol = 1e-12;
  for (int draw = 0; draw < 1000; ++draw) {
    auto raw = testsupport::random_params(rng);
    const auto params = hdawz::validate(raw);
    const auto designed = params.designed();
    const double d_star = analytics::optimal_distortion(params);

    const double hyb = analytics::hybrid_mismatch_distortion(params, designed);
    if (rel_err(hyb, d_star) > tol)
      return describe("hybrid distortion at the design point", hyb, d_star);

    const double sup = analytics::superimposed_mismatch_distortion(params, designed);
    if (rel_err(sup, d_star) > tol)
      return describe("superimposed distortion at the design point", sup, d_star);

    const auto sep = analytics::separation_coefficients(params);
    const double sep_d = (1.0 - sep.alpha) * params.sigma_t2();
    if (rel_err(sep_d, d_star) > tol)
      return describe("separation distortion at its quantizer gain", sep_d, d_star);

    const auto plan = analytics::superimposed_plan(params);
    if (rel_err(plan.p_wz + plan.p_hwz, params.p()) > tol)
      return describe("power split total", plan.p_wz + plan.p_hwz, params.p());

    const auto rates = analytics::rate_with_leakage(params);
    if (rel_err(rates.wz_rate, rates.c_s + params.i_eps()) > tol)
      return describe("quantizer rate at the optimum", rates.wz_rate,
                      rates.c_s + params.i_eps());

    raw.i_eps = 0.0;
    const auto secret = hdawz::validate(raw);
    const auto hyb_coef = analytics::hybrid_coefficients(secret);
    const double k2 = hyb_coef.k * hyb_coef.k;
    const double p = secret.p(), n1 = secret.n1(), n2 = secret.n2();
    const double closed =
        p * p * (n2 - n1) / (secret.sigma_t2() * (p + n1) * (p + n2));
    if (rel_err(k2, closed) > tol)
      return describe("embedding gain at zero leakage", k2, closed);
  }
  return {};
}

// 2. The bundled reference design hits its published values.
std::string check_reference_point() {
  const auto params = reference();
  const double tol = 1e-4;
  const struct {
    const char* name;
    double got;
    double want;
  } targets[] = {
      {"d_star", analytics::optimal_distortion(params), 2.7558},
      {"uncoded distortion at the design point",
       analytics::uncoded_distortion(params, params.designed()), 3.8902},
      {"k_squared",
       [&] {
         const auto h = analytics::hybrid_coefficients(params);
         return h.k * h.k;
       }(),
       0.14806},
      {"p_hwz", analytics::superimposed_plan(params).p_hwz, 0.53549},
      {"hybrid distortion at snr1a 50",
       analytics::hybrid_mismatch_distortion(params, params.at_snr(50.0)), 1.0470},
      {"c_s", analytics::secrecy_capacity(params), 0.2297},
  };
  for (const auto& t : targets)
    if (!(std::abs(t.got - t.want) <= tol)) return describe(t.name, t.got, t.want);
  return {};
}

// 3. Sampled distortion agrees with the closed forms at the design point and
// under mismatch; the uncoded eavesdropper leakage lands on its budget.
std::string check_monte_carlo() {
  const auto params = reference();
  const mc::SimulationConfig cfg{1000000, 11, 65536, 4};
  constexpr mc::SchemeKind schemes[] = {
      mc::SchemeKind::Hybrid, mc::SchemeKind::Separation,
      mc::SchemeKind::Superimposed, mc::SchemeKind::Uncoded};
  for (mc::SchemeKind scheme : schemes) {
    for (double scale : {1.0, 0.5, 0.2}) {
      const auto point = params.at_noise(params.n1() * scale);
      const auto report = mc::simulate(scheme, params, point, cfg);
      if (!(std::abs(report.empirical_d - report.analytic_d) <=
            4.0 * report.std_err)) {
        std::ostringstream os;
        os << mc::scheme_name(scheme) << " at n1a scale " << scale << ": |"
           << report.empirical_d << " - " << report.analytic_d << "| > 4 * "
           << report.std_err;
        return os.str();
      }
      if (scheme == mc::SchemeKind::Uncoded) {
        if (!report.empirical_leakage)
          return "uncoded report lost its leakage estimate";
        if (rel_err(*report.empirical_leakage, params.i_eps()) > 0.01)
          return describe("uncoded leakage", *report.empirical_leakage,
                          params.i_eps());
      }
    }
  }
  return {};
}

// 4. The covariance solver agrees with straight least squares on sampled data
// from the physical model, and with the published designed-point weights.
std::string check_estimator_oracle() {
  constexpr int kDraws = 100;
  struct Case {
    hdawz::SystemParams raw;
    double n1a = 0.0;
  };
  std::vector<Case> cases(kDraws);
  std::mt19937_64 rng(404);
  for (auto& c : cases) {
    c.raw = testsupport::random_params(rng);
    const auto params = hdawz::validate(c.raw);
    c.n1a = testsupport::random_point(rng, params).n1a();
  }

  std::vector<std::string> issue(kDraws);
  const unsigned workers = 4;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = static_cast<int>(w); i < kDraws; i += static_cast<int>(workers)) {
        try {
          const auto params = hdawz::validate(cases[static_cast<std::size_t>(i)].raw);
          const auto point = params.at_noise(cases[static_cast<std::size_t>(i)].n1a);
          const auto fit = testsupport::sample_hybrid_ols(
              params, point, 1000000, 9000 + static_cast<std::uint64_t>(i));
          const auto sol = hdawz::mmse::solve(hdawz::mmse::hybrid_problem(params, point));
          for (int j = 0; j < 3; ++j) {
            if (!(std::abs(sol.coeffs[static_cast<std::size_t>(j)] -
                           fit.beta[j]) <= 3.0 * fit.se[j])) {
              std::ostringstream os;
              os << "draw " << i << " weight " << j << ": solver "
                 << sol.coeffs[static_cast<std::size_t>(j)] << " vs fit "
                 << fit.beta[j] << " +- " << fit.se[j];
              issue[static_cast<std::size_t>(i)] = os.str();
            }
          }
          const auto at_design =
              hdawz::mmse::solve(hdawz::mmse::hybrid_problem(params, params.designed()));
          const auto hyb = analytics::hybrid_coefficients(params);
          const double want[3] = {hyb.lambda1, hyb.lambda2, hyb.lambda3};
          for (int j = 0; j < 3; ++j) {
            if (rel_err(at_design.coeffs[static_cast<std::size_t>(j)], want[j]) > 1e-10) {
              issue[static_cast<std::size_t>(i)] =
                  describe("designed-point weight",
                           at_design.coeffs[static_cast<std::size_t>(j)], want[j]);
            }
          }
        } catch (const std::exception& e) {
          issue[static_cast<std::size_t>(i)] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& s : issue)
    if (!s.empty()) return s;
  return {};
}

// 5. Decay exponents: one for every scheme that keeps improving with SNR,
// zero for the one that plateaus.
std::string check_exponents() {
  const auto study = hdawz::sweep::estimate_exponents(reference(), {});
  if (study.estimates.size() != 4) return "expected four exponent estimates";
  for (const auto& est : study.estimates) {
    const char* name = mc::scheme_name(est.scheme);
    if (!(est.zeta_hat >= -0.02 && est.zeta_hat <= 1.02))
      return describe(name, est.zeta_hat, 1.0);
    if (est.scheme == mc::SchemeKind::Separation) {
      if (!(std::abs(est.zeta_hat) <= 0.01)) return describe(name, est.zeta_hat, 0.0);
    } else if (!(std::abs(est.zeta_hat - 1.0) <= 0.05)) {
      return describe(name, est.zeta_hat, 1.0);
    }
  }
  return {};
}

// 6. The bundled mismatch study has the right shape: the schemes coincide at
// the design point, keep their pecking order above it, and the analog ones
// keep improving while separation stays flat.
std::string check_mismatch_figure() {
  const auto params = reference();
  const auto outcome = hdawz::sweep::mismatch_study(params, 100000, 2026, 65536, 4);
  if (outcome.curves.size() != 4) return "expected four curves";
  const auto& hyb = outcome.curves[0];
  const auto& sep = outcome.curves[1];
  const auto& sup = outcome.curves[2];
  const auto& unc = outcome.curves[3];
  const double d_star = analytics::optimal_distortion(params);

  for (const auto* curve : {&hyb, &sep, &sup, &unc})
    if (curve->points.size() != 41) return "expected 41 grid points per curve";

  if (rel_err(hyb.points[0].analytic_d, d_star) > 1e-12 ||
      rel_err(sep.points[0].analytic_d, d_star) > 1e-12 ||
      rel_err(sup.points[0].analytic_d, d_star) > 1e-12)
    return "coded schemes do not coincide at the designed SNR";

  for (std::size_t i = 1; i < 41; ++i) {
    const double h = hyb.points[i].analytic_d;
    const double s = sup.points[i].analytic_d;
    if (!(h < s && s < sep.points[i].analytic_d && h < unc.points[i].analytic_d)) {
      std::ostringstream os;
      os << "ordering breaks at snr1a = " << hyb.points[i].snr1a;
      return os.str();
    }
    for (const auto* curve : {&hyb, &sup, &unc})
      if (!(curve->points[i].analytic_d < curve->points[i - 1].analytic_d)) {
        std::ostringstream os;
        os << mc::scheme_name(curve->scheme)
           << " stops decreasing at snr1a = " << curve->points[i].snr1a;
        return os.str();
      }
  }

  for (const auto& curve : outcome.curves)
    for (const auto& pt : curve.points) {
      if (!pt.empirical_d || !pt.std_err) return "missing empirical column";
      if (!(std::abs(*pt.empirical_d - pt.analytic_d) <= 5.0 * *pt.std_err)) {
        std::ostringstream os;
        os << mc::scheme_name(curve.scheme) << " empirical off at snr1a = "
           << pt.snr1a;
        return os.str();
      }
    }
  return {};
}

// 7. The CLI is bit-exact: same flags and seed give the same bytes, and the
// thread count never shows up in the output.
std::string check_reproducibility() {
  const fs::path dir =
      fs::temp_directory_path() / ("hdawz_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto cleanup = [&dir] {
    std::error_code ec;
    fs::remove_all(dir, ec);
  };

  const fs::path cfg = dir / "design.cfg";
  {
    std::ofstream out(cfg);
    out << "p = 10\nn1 = 1\nn2 = 1.4285714285714286\nsigma_v2 = 8\n"
           "sigma_t2 = 5\ni_eps = 0.2\nrate_r = 0.15\n";
  }

  const auto run = [&](const std::string& extra, const fs::path& csv) -> bool {
    const std::string cmd = std::string("\"") + HDAWZ_CLI_PATH + "\" sweep -c \"" +
                            cfg.string() +
                            "\" --points 11 --trials 20000 --block-size 4096 " +
                            extra + " -o \"" + csv.string() + "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
  };
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };

  const fs::path a = dir / "a.csv", b = dir / "b.csv", c = dir / "c.csv",
                 d = dir / "d.csv";
  if (!run("--seed 7", a) || !run("--seed 7", b) ||
      !run("--seed 7 --threads 4", c) || !run("--seed 8", d)) {
    cleanup();
    return "sweep run through the CLI failed";
  }
  const std::string bytes = slurp(a);
  std::string reason;
  if (bytes.empty())
    reason = "empty CSV";
  else if (slurp(b) != bytes)
    reason = "rerun with the same seed changed the bytes";
  else if (slurp(c) != bytes)
    reason = "thread count changed the bytes";
  else if (slurp(d) == bytes)
    reason = "seed is not reaching the simulator";
  cleanup();
  return reason;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_s;
    std::function<std::string()> run;
  };
  const Criterion criteria[] = {
      {"closed-form identities, 1000 random designs, rel tol 1e-12", 1.0,
       check_identities},
      {"reference design point values, abs tol 1e-4", 1.0, check_reference_point},
      {"Monte-Carlo agreement, 1e6 trials per point, 4 sigma", 60.0,
       check_monte_carlo},
      {"solver vs sampled least squares, 100 problems, 3 sigma", 30.0,
       check_estimator_oracle},
      {"distortion decay exponents on analytic grids", 5.0, check_exponents},
      {"reference mismatch study shape, 1e5 trials per point", 120.0,
       check_mismatch_figure},
      {"byte-identical reruns through the CLI", 60.0, check_reproducibility},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && elapsed > criterion.budget_s) {
      std::ostringstream os;
      os << "over budget: " << elapsed << " s > " << criterion.budget_s << " s";
      detail = os.str();
    }
    std::printf("[%s] %d. %s (%.2fs)\n", detail.empty() ? "PASS" : "FAIL", index,
                criterion.label, elapsed);
    if (!detail.empty()) {
      std::printf("       %s\n", detail.c_str());
      ++failures;
    }
  }
  if (failures == 0)
    std::printf("all %d criteria passed\n", index);
  else
    std::printf("%d of %d criteria failed\n", failures, index);
  return failures == 0 ? 0 : 1;
}
