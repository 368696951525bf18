#include "hdawz/csv_report.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "hdawz/analytics.hpp"

namespace hdawz::report {

namespace {

void append_row(std::string& out, char sep, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) out.push_back(sep);
    out += cell;
    first = false;
  }
  out.push_back('\n');
}

std::string format_u64(std::uint64_t value) {
  std::array<char, 24> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string render_compute(const ValidatedParams& params, char sep) {
  const auto rates = analytics::rate_with_leakage(params);
  const auto sep_coef = analytics::separation_coefficients(params);
  const auto unc = analytics::uncoded_coefficients(params);
  const auto hyb = analytics::hybrid_coefficients(params);
  const auto gap = analytics::hybrid_rate_gap(params);
  const auto plan = analytics::superimposed_plan(params);

  std::string out;
  auto row = [&](const char* name, double value) {
    append_row(out, sep, {name, format_double(value)});
  };
  row("c_s", rates.c_s);
  row("r_ieps", rates.r_ieps);
  row("wz_rate", rates.wz_rate);
  row("d_star", analytics::optimal_distortion(params));
  row("alpha_sep", sep_coef.alpha);
  row("lambda_sep_1", sep_coef.lambda1);
  row("lambda_sep_2", sep_coef.lambda2);
  row("alpha_unc", unc.alpha);
  row("lambda_unc_1", unc.lambda1);
  row("lambda_unc_2", unc.lambda2);
  row("k", hyb.k);
  row("k_squared", hyb.k * hyb.k);
  row("lambda_hyb_1", hyb.lambda1);
  row("lambda_hyb_2", hyb.lambda2);
  row("lambda_hyb_3", hyb.lambda3);
  row("rate_gap_lower", gap.lower);
  row("rate_gap_upper", gap.upper);
  row("p_wz", plan.p_wz);
  row("p_hwz", plan.p_hwz);
  row("k1", plan.k1);
  row("k1_squared", plan.k1 * plan.k1);
  row("sigma_ttilde2", plan.sigma_ttilde2);
  return out;
}

std::string render_sweep(const sweep::SweepOutcome& outcome, char sep,
                         std::uint64_t trials, std::uint64_t seed) {
  std::string out;
  append_row(out, sep, {"scheme", "snr1a", "n1a", "analytic_d", "empirical_d",
                        "std_err", "trials", "seed"});
  const std::string trials_text = format_u64(trials);
  const std::string seed_text = format_u64(seed);
  for (const auto& curve : outcome.curves) {
    const std::string name = montecarlo::scheme_name(curve.scheme);
    for (const auto& pt : curve.points) {
      append_row(out, sep,
                 {name, format_double(pt.snr1a), format_double(pt.n1a),
                  format_double(pt.analytic_d),
                  pt.empirical_d ? format_double(*pt.empirical_d) : "",
                  pt.std_err ? format_double(*pt.std_err) : "", trials_text,
                  seed_text});
    }
  }
  return out;
}

std::string render_exponents(const std::vector<sweep::ExponentEstimate>& estimates,
                             char sep) {
  std::string out;
  append_row(out, sep, {"scheme", "zeta_hat", "grid_min", "grid_max"});
  for (const auto& est : estimates) {
    append_row(out, sep,
               {montecarlo::scheme_name(est.scheme), format_double(est.zeta_hat),
                format_double(est.grid_min), format_double(est.grid_max)});
  }
  return out;
}

std::string render_simulation(montecarlo::SchemeKind scheme, double snr1a,
                              double n1a, const montecarlo::SimulationReport& report) {
  std::ostringstream os;
  os << montecarlo::scheme_name(scheme) << " snr1a=" << format_double(snr1a)
     << " n1a=" << format_double(n1a)
     << " analytic_d=" << format_double(report.analytic_d);
  if (report.trials > 0) {
    os << " empirical_d=" << format_double(report.empirical_d)
       << " std_err=" << format_double(report.std_err);
    if (report.empirical_leakage)
      os << " leakage=" << format_double(*report.empirical_leakage);
  }
  os << " trials=" << report.trials << " seed=" << report.seed << "\n";
  return os.str();
}

std::string render_plot_script(const std::string& csv_path, bool with_empirical) {
  static constexpr const char* kSchemes[] = {"hybrid", "separation", "superimposed",
                                             "uncoded"};
  std::ostringstream os;
  os << "# distortion vs actual SNR, one series per scheme\n"
     << "set datafile separator \",\"\n"
     << "set datafile missing \"\"\n"
     << "set key top right\n"
     << "set xlabel \"actual main channel SNR (linear)\"\n"
     << "set ylabel \"distortion\"\n"
     << "set logscale y\n";
  os << "plot \\\n";
  bool first = true;
  for (const char* scheme : kSchemes) {
    if (!first) os << ", \\\n";
    os << "  \"" << csv_path << "\" using 2:(strcol(1) eq \"" << scheme
       << "\" ? column(4) : NaN) with lines lw 2 title \"" << scheme << "\"";
    if (with_empirical) {
      os << ", \\\n  \"" << csv_path << "\" using 2:(strcol(1) eq \"" << scheme
         << "\" ? column(5) : NaN) with points pt 7 ps 0.5 title \"" << scheme
         << " mc\"";
    }
    first = false;
  }
  os << "\n";
  return os.str();
}

}  // namespace hdawz::report
