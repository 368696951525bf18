#include "hdawz/analytics.hpp"

#include <cmath>
#include <sstream>

namespace hdawz::analytics {

namespace {

// (1 + p/n1) / (1 + p/n2), the SNR ratio whose half-log is the secrecy capacity.
double channel_gain(const ValidatedParams& params) {
  const double p = params.p();
  return (1.0 + p / params.n1()) / (1.0 + p / params.n2());
}

double leakage_factor(const ValidatedParams& params) {
  return std::exp2(2.0 * params.i_eps());
}

}  // namespace

double secrecy_capacity(const ValidatedParams& params) {
  return 0.5 * std::log2(channel_gain(params));
}

double optimal_distortion(const ValidatedParams& params) {
  return params.sigma_t2() / (channel_gain(params) * leakage_factor(params));
}

RateReport rate_with_leakage(const ValidatedParams& params) {
  RateReport report;
  report.c_s = secrecy_capacity(params);
  report.r_ieps = report.c_s + params.i_eps();
  const double d = optimal_distortion(params);
  const double alpha = separation_coefficients(params).alpha;
  report.wz_rate = 0.5 * std::log2((alpha * params.sigma_t2() + d) / d);
  return report;
}

SeparationCoefficients separation_coefficients(const ValidatedParams& params) {
  const double d = optimal_distortion(params);
  const double p = params.p();
  const double ratio =
      leakage_factor(params) * (p + params.n1()) * params.n2() /
      ((p + params.n2()) * params.n1());
  const double alpha = d / params.sigma_t2() * (ratio - 1.0);
  return {alpha, std::sqrt(alpha), 1.0 - alpha};
}

double separation_mismatch_distortion(const ValidatedParams& params, const MismatchPoint&) {
  return optimal_distortion(params);
}

UncodedCoefficients uncoded_coefficients(const ValidatedParams& params) {
  const double need = params.n2() * (leakage_factor(params) - 1.0);
  if (need > params.p()) {
    std::ostringstream os;
    os << "meeting i_eps = " << params.i_eps() << " uncoded needs power "
       << need << " > p = " << params.p();
    raise(ErrorCode::LeakageBudgetExceedsPower, os.str());
  }
  const double alpha = std::sqrt(need / params.sigma_v2());
  const double den = params.n1() + alpha * alpha * params.sigma_t2();
  return {alpha, alpha * params.sigma_t2() / den, params.n1() / den};
}

double uncoded_distortion(const ValidatedParams& params, const MismatchPoint& point) {
  const double alpha = uncoded_coefficients(params).alpha;
  return params.sigma_t2() / (1.0 + alpha * alpha * params.sigma_t2() / point.n1a());
}

HybridCoefficients hybrid_coefficients(const ValidatedParams& params) {
  const double p = params.p();
  const double n1 = params.n1();
  const double k2 =
      (p * params.n2() / (p + params.n2()) * leakage_factor(params) -
       p * n1 / (p + n1)) / params.sigma_t2();
  const double k = std::sqrt(k2);
  const double st2 = params.sigma_t2();
  const double quo = p * n1 / (p + n1);
  const double den = k2 * st2 + quo;
  return {k, k * st2 / den, quo / den, -p * k * st2 / (k2 * st2 * (p + n1) + p * n1)};
}

double hybrid_mismatch_distortion(const ValidatedParams& params, const MismatchPoint& point) {
  const double p = params.p();
  const double a =
      params.n2() / (p + params.n2()) * leakage_factor(params) -
      params.n1() / (p + params.n1());
  const double n1a = point.n1a();
  return params.sigma_t2() * n1a / (a * (p + n1a) + n1a);
}

RateGap hybrid_rate_gap(const ValidatedParams& params) {
  const double p = params.p();
  const auto hyb = hybrid_coefficients(params);
  const double k2st2 = hyb.k * hyb.k * params.sigma_t2();
  RateGap gap;
  gap.lower = 0.5 * std::log2((p + k2st2) / p);
  gap.upper = 0.5 * std::log2(1.0 + p * (params.sigma_v2() / params.sigma_t2()) *
                                        (params.n2() - params.n1()) /
                                        (params.n2() * (p + params.n1())));
  return gap;
}

SuperimposedPlan superimposed_plan(const ValidatedParams& params) {
  const double p = params.p();
  const double n1 = params.n1();
  const double n2 = params.n2();
  const double t = std::exp2(-2.0 * params.rate_r());
  const double den = (p + n2) - (p + n1) * t;

  SuperimposedPlan plan;
  plan.p_wz = (p + n1) * (p + n2) * (1.0 - t) / den;
  plan.p_hwz = (n2 * (p + n1) * t - n1 * (p + n2)) / den;
  // rate_r at the capacity boundary leaves a rounding-level residue of
  // either sign; snap it to the exact zero-power plan
  if (plan.p_hwz < 1e-12 * p) plan.p_hwz = 0.0;
  plan.sigma_ttilde2 = params.sigma_t2() * t;
  const double k12 =
      (plan.p_hwz * n2 / (plan.p_hwz + n2) * leakage_factor(params) -
       plan.p_hwz * n1 / (plan.p_hwz + n1)) / plan.sigma_ttilde2;
  plan.k1 = std::sqrt(k12);
  return plan;
}

double superimposed_mismatch_distortion(const ValidatedParams& params,
                                        const MismatchPoint& point) {
  const auto plan = superimposed_plan(params);
  // Zero hybrid power: the auxiliary still carries information in the
  // vanishing-power limit, leaving exactly the leakage factor of gain.
  if (plan.p_hwz == 0.0)
    return plan.sigma_ttilde2 / leakage_factor(params);
  const double a =
      params.n2() / (plan.p_hwz + params.n2()) * leakage_factor(params) -
      params.n1() / (plan.p_hwz + params.n1());
  const double n1a = point.n1a();
  return plan.sigma_ttilde2 * n1a / (a * (plan.p_hwz + n1a) + n1a);
}

double decoding_failure_distortion(const ValidatedParams& params) {
  return params.sigma_t2();
}

}  // namespace hdawz::analytics
