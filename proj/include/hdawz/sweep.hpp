#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdawz/montecarlo.hpp"
#include "hdawz/params.hpp"

namespace hdawz::sweep {

// One mismatch experiment: evaluate each scheme over a strictly increasing
// grid of actual SNR values, all at or above the designed SNR.  When cfg is
// absent only the closed forms are evaluated.
struct SweepSpec {
  std::vector<double> snr1a_grid;
  std::vector<montecarlo::SchemeKind> schemes;  // empty means all four
  std::optional<montecarlo::SimulationConfig> cfg;
};

struct CurvePoint {
  double snr1a = 0.0;
  double n1a = 0.0;
  double analytic_d = 0.0;
  std::optional<double> empirical_d;
  std::optional<double> std_err;
};

struct DistortionCurve {
  montecarlo::SchemeKind scheme;
  std::vector<CurvePoint> points;  // grid order
};

struct SweepOutcome {
  std::vector<DistortionCurve> curves;   // sorted by scheme name
  std::vector<std::string> diagnostics;  // schemes omitted, with the reason
};

// Evaluates every requested scheme over the grid.  A scheme whose closed form
// is undefined for these params (for example uncoded past its power budget)
// is omitted with a diagnostic; the others still run.  Every simulation in
// the sweep runs under the same seed, so points share their random draws.
SweepOutcome run_sweep(const ValidatedParams& params, const SweepSpec& spec);

// Distortion decay exponent: the negated least-squares slope of log D against
// log SNR over the top decade of the curve.  Requires at least 8 points
// spanning at least 3 decades; throws InsufficientSpan otherwise.
double estimate_exponent(const DistortionCurve& curve);

struct ExponentEstimate {
  montecarlo::SchemeKind scheme;
  double zeta_hat = 0.0;
  double grid_min = 0.0;
  double grid_max = 0.0;
};

struct ExponentStudy {
  std::vector<ExponentEstimate> estimates;
  std::vector<std::string> diagnostics;  // schemes omitted, with the reason
};

// Runs each scheme over an internally generated log-spaced grid spanning
// three decades starting at max(1e3, designed SNR) and estimates the decay
// exponent of its analytic curve.
ExponentStudy estimate_exponents(const ValidatedParams& params,
                                 const std::vector<montecarlo::SchemeKind>& schemes);

std::vector<double> linear_grid(double lo, double hi, int count);
std::vector<double> log_grid(double lo, double hi, int count);

// The reference design the mismatch figure is built around.
SystemParams reference_params();

// The full mismatch study: all four schemes on 41 evenly spaced SNR values
// over [10, 50], analytic plus empirical at the given trial count
// (trials = 0 for analytic-only).
SweepOutcome mismatch_study(const ValidatedParams& params, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t block_size,
                            unsigned threads);

}  // namespace hdawz::sweep
