#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "hdawz/params.hpp"

namespace hdawz::montecarlo {

enum class SchemeKind { Hybrid, Separation, Superimposed, Uncoded };

const char* scheme_name(SchemeKind scheme);
std::optional<SchemeKind> parse_scheme(std::string_view name);

// Simulation size and reproducibility controls.
//
// Results are a pure function of (params, point, trials, seed, block_size):
// trials are partitioned into blocks of block_size, each block draws from its
// own substream keyed by (seed, block index), and per-block statistics are
// merged in ascending block order.  threads is a scheduling hint only and
// never changes any output value.
struct SimulationConfig {
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t block_size = 65536;
  unsigned threads = 1;
};

struct SimulationReport {
  double analytic_d = 0.0;
  double empirical_d = 0.0;
  double std_err = 0.0;  // standard error of empirical_d; 0 when trials < 2
  std::optional<double> empirical_leakage;  // uncoded only
  std::optional<double> power_mean;  // mean squared channel input, when the
  std::optional<double> power_se;    // scheme transmits an explicit signal
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Genie-aided estimation error of one scheme at one operating point: the
// receiver is handed the correctly decoded auxiliary and applies the linear
// estimator matched to the actual noise level.  analytic_d carries the
// corresponding closed-form value for comparison.
SimulationReport simulate(SchemeKind scheme, const ValidatedParams& params,
                          const MismatchPoint& point, const SimulationConfig& cfg);

SimulationReport simulate_separation(const ValidatedParams& params,
                                     const MismatchPoint& point,
                                     const SimulationConfig& cfg);
SimulationReport simulate_uncoded(const ValidatedParams& params,
                                  const MismatchPoint& point,
                                  const SimulationConfig& cfg);
SimulationReport simulate_hybrid(const ValidatedParams& params,
                                 const MismatchPoint& point,
                                 const SimulationConfig& cfg);
SimulationReport simulate_superimposed(const ValidatedParams& params,
                                       const MismatchPoint& point,
                                       const SimulationConfig& cfg);

// Standard normal stream for one block.  Box-Muller over a mt19937_64
// substream keyed by (seed, block_index): each refill consumes two engine
// words, u1 in (0,1] then u2 in [0,1), and yields r*cos(2*pi*u2) first,
// r*sin(2*pi*u2) second.  std::normal_distribution is avoided on purpose,
// its draw sequence is implementation-defined.  Exposed for the tests'
// independent sampling oracles.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t block_index);
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hdawz::montecarlo
