#include "hdawz/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "hdawz/analytics.hpp"

namespace hdawz::sweep {

namespace {

using montecarlo::SchemeKind;

constexpr SchemeKind kAllSchemes[] = {SchemeKind::Hybrid, SchemeKind::Separation,
                                      SchemeKind::Superimposed, SchemeKind::Uncoded};

double analytic_distortion(SchemeKind scheme, const ValidatedParams& params,
                           const MismatchPoint& point) {
  switch (scheme) {
    case SchemeKind::Hybrid:
      return analytics::hybrid_mismatch_distortion(params, point);
    case SchemeKind::Separation:
      return analytics::separation_mismatch_distortion(params, point);
    case SchemeKind::Superimposed:
      return analytics::superimposed_mismatch_distortion(params, point);
    case SchemeKind::Uncoded:
      return analytics::uncoded_distortion(params, point);
  }
  raise(ErrorCode::Usage, "unknown scheme");
}

void check_spec(const ValidatedParams& params, const SweepSpec& spec) {
  if (spec.snr1a_grid.empty())
    raise(ErrorCode::Usage, "sweep grid must contain at least one SNR value");
  for (std::size_t i = 0; i < spec.snr1a_grid.size(); ++i) {
    const double snr = spec.snr1a_grid[i];
    if (!std::isfinite(snr) || snr <= 0.0)
      raise(ErrorCode::MismatchOutOfRange, "sweep grid values must be finite and positive");
    if (i > 0 && !(snr > spec.snr1a_grid[i - 1]))
      raise(ErrorCode::Usage, "sweep grid must be strictly increasing");
  }
  if (spec.snr1a_grid.front() < params.snr1()) {
    std::ostringstream os;
    os << "sweep grid starts at " << spec.snr1a_grid.front()
       << ", below the designed SNR " << params.snr1();
    raise(ErrorCode::MismatchOutOfRange, os.str());
  }
}

}  // namespace

SweepOutcome run_sweep(const ValidatedParams& params, const SweepSpec& spec) {
  check_spec(params, spec);

  std::vector<SchemeKind> schemes(spec.schemes);
  if (schemes.empty()) schemes.assign(std::begin(kAllSchemes), std::end(kAllSchemes));
  std::sort(schemes.begin(), schemes.end(), [](SchemeKind a, SchemeKind b) {
    return std::strcmp(montecarlo::scheme_name(a), montecarlo::scheme_name(b)) < 0;
  });
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

  std::vector<MismatchPoint> points;
  points.reserve(spec.snr1a_grid.size());
  for (double snr : spec.snr1a_grid) points.push_back(params.at_snr(snr));

  SweepOutcome outcome;
  for (SchemeKind scheme : schemes) {
    DistortionCurve curve{scheme, {}};
    curve.points.reserve(points.size());
    try {
      for (std::size_t i = 0; i < points.size(); ++i) {
        CurvePoint cp;
        cp.snr1a = spec.snr1a_grid[i];
        cp.n1a = points[i].n1a();
        cp.analytic_d = analytic_distortion(scheme, params, points[i]);
        if (spec.cfg) {
          const auto report = montecarlo::simulate(scheme, params, points[i], *spec.cfg);
          cp.empirical_d = report.empirical_d;
          cp.std_err = report.std_err;
        }
        curve.points.push_back(cp);
      }
    } catch (const Error& e) {
      outcome.diagnostics.push_back(std::string(montecarlo::scheme_name(scheme)) +
                                    " omitted: " + e.what());
      continue;
    }
    outcome.curves.push_back(std::move(curve));
  }
  return outcome;
}

double estimate_exponent(const DistortionCurve& curve) {
  const auto& pts = curve.points;
  if (pts.size() < 8)
    raise(ErrorCode::InsufficientSpan,
          "exponent regression needs at least 8 points");
  const double lo = pts.front().snr1a;
  const double hi = pts.back().snr1a;
  if (!(hi / lo >= 1000.0 * (1.0 - 1e-9)))
    raise(ErrorCode::InsufficientSpan,
          "exponent regression needs at least 3 decades of SNR");

  // Least squares on (log SNR, log D) over the top decade.
  const double cut = hi / 10.0 * (1.0 - 1e-9);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const auto& pt : pts) {
    if (pt.snr1a < cut) continue;
    const double x = std::log(pt.snr1a);
    const double y = std::log(pt.analytic_d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2)
    raise(ErrorCode::InsufficientSpan, "top decade holds fewer than 2 points");
  const double slope = (sxy - sx * sy / n) / (sxx - sx * sx / n);
  return -slope;
}

ExponentStudy estimate_exponents(const ValidatedParams& params,
                                 const std::vector<SchemeKind>& schemes) {
  const double lo = std::max(1000.0, params.snr1());
  const double hi = 1000.0 * lo;
  SweepSpec spec;
  spec.snr1a_grid = log_grid(lo, hi, 25);
  spec.schemes = schemes;

  auto outcome = run_sweep(params, spec);
  ExponentStudy study;
  study.diagnostics = std::move(outcome.diagnostics);
  study.estimates.reserve(outcome.curves.size());
  for (const auto& curve : outcome.curves)
    study.estimates.push_back({curve.scheme, estimate_exponent(curve), lo, hi});
  return study;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1 || !(hi >= lo)) raise(ErrorCode::Usage, "bad grid bounds");
  if (count == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 1 || !(hi >= lo) || lo <= 0.0) raise(ErrorCode::Usage, "bad grid bounds");
  if (count == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (count - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SystemParams reference_params() {
  SystemParams params;
  params.p = 10.0;
  params.n1 = 1.0;
  params.n2 = 10.0 / 7.0;
  params.sigma_v2 = 8.0;
  params.sigma_t2 = 5.0;
  params.i_eps = 0.2;
  params.rate_r = 0.15;
  return params;
}

SweepOutcome mismatch_study(const ValidatedParams& params, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t block_size,
                            unsigned threads) {
  SweepSpec spec;
  spec.snr1a_grid = linear_grid(10.0, 50.0, 41);
  if (trials > 0) spec.cfg = montecarlo::SimulationConfig{trials, seed, block_size, threads};
  return run_sweep(params, spec);
}

}  // namespace hdawz::sweep
