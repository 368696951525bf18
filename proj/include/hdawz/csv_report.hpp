#pragma once

#include <string>
#include <vector>

#include "hdawz/montecarlo.hpp"
#include "hdawz/params.hpp"
#include "hdawz/sweep.hpp"

namespace hdawz::report {

// Locale-independent number rendering: '.' decimal point, 12 significant
// digits, no thousands separators.  All output files use '\n' endings.
std::string format_double(double value);

// name,value rows for every closed-form quantity of the design.
std::string render_compute(const ValidatedParams& params, char sep);

// scheme,snr1a,n1a,analytic_d,empirical_d,std_err,trials,seed with rows
// sorted by (scheme name, snr1a); empirical fields empty when analytic-only.
std::string render_sweep(const sweep::SweepOutcome& outcome, char sep,
                         std::uint64_t trials, std::uint64_t seed);

// scheme,zeta_hat,grid_min,grid_max
std::string render_exponents(const std::vector<sweep::ExponentEstimate>& estimates,
                             char sep);

// Single key=value summary line for one simulation.
std::string render_simulation(montecarlo::SchemeKind scheme, double snr1a,
                              double n1a, const montecarlo::SimulationReport& report);

// gnuplot script plotting the sweep CSV, one series per scheme, log-scale
// distortion against linear SNR.  Empirical overlays included when the CSV
// carries them.
std::string render_plot_script(const std::string& csv_path, bool with_empirical);

}  // namespace hdawz::report
