#pragma once

#include "hdawz/params.hpp"

namespace hdawz::analytics {

struct RateReport {
  double c_s;      // secrecy capacity of the wiretap pair
  double r_ieps;   // c_s plus the permitted leakage rate
  double wz_rate;  // source coding rate with side information at D*; equals r_ieps
};

struct SeparationCoefficients {
  double alpha;    // quantizer gain; codeword variance is alpha*sigma_v2 + D*
  double lambda1;  // estimator weight on the decoded codeword, sqrt(alpha)
  double lambda2;  // estimator weight on the side information, 1 - alpha
};

struct UncodedCoefficients {
  double alpha;    // power scaling of the bare source, alpha^2 * sigma_v2 <= p
  double lambda1;  // estimator weight on the channel output
  double lambda2;  // estimator weight on the side information
};

struct HybridCoefficients {
  double k;  // source embedding gain of the auxiliary U = X + k V
  double lambda1;
  double lambda2;
  double lambda3;
};

struct SuperimposedPlan {
  double p_wz;           // power of the digital (secrecy coded) stream
  double p_hwz;          // power of the hybrid stream; p_wz + p_hwz = p
  double k1;             // embedding gain of the hybrid stream
  double sigma_ttilde2;  // residual uncertainty after the digital stream
};

struct RateGap {
  double lower;
  double upper;
};

// Secrecy capacity of the degraded Gaussian wiretap pair, bits per use.
double secrecy_capacity(const ValidatedParams& params);

// c_s, the leakage-augmented rate, and the matched source coding rate.
// wz_rate is evaluated through the quantizer formulas as a cross-check and
// agrees with r_ieps to machine precision.
RateReport rate_with_leakage(const ValidatedParams& params);

// Distortion of the matched design, the best any of the schemes achieves at
// the designed SNR.
double optimal_distortion(const ValidatedParams& params);

// Separation scheme: quantize against the side information, protect the index
// with a secrecy code.  Distortion stays at optimal_distortion for every
// operating point at or above the design.
SeparationCoefficients separation_coefficients(const ValidatedParams& params);
double separation_mismatch_distortion(const ValidatedParams& params, const MismatchPoint& point);

// Uncoded scheme: transmit alpha * V directly.  Throws
// LeakageBudgetExceedsPower when no alpha meets the leakage target within the
// power constraint, i.e. n2 * (2^(2 i_eps) - 1) > p.
UncodedCoefficients uncoded_coefficients(const ValidatedParams& params);
double uncoded_distortion(const ValidatedParams& params, const MismatchPoint& point);

// Hybrid scheme: all power in one stream carrying U = X + k V.
HybridCoefficients hybrid_coefficients(const ValidatedParams& params);
double hybrid_mismatch_distortion(const ValidatedParams& params, const MismatchPoint& point);

// Bounds on the rate cost of the hybrid auxiliary relative to the channel
// capacity consumed; lower <= actual gap <= upper.
RateGap hybrid_rate_gap(const ValidatedParams& params);

// Superimposed scheme: digital stream at rate_r plus a hybrid stream in the
// remaining power.  At rate_r = 0 the plan degenerates to the hybrid scheme;
// at rate_r = C the hybrid stream gets zero power.
SuperimposedPlan superimposed_plan(const ValidatedParams& params);
double superimposed_mismatch_distortion(const ValidatedParams& params, const MismatchPoint& point);

// Distortion floor when the digital index cannot be decoded (actual channel
// worse than designed): the receiver falls back to the side information only
// and is left with the full unknown component.
double decoding_failure_distortion(const ValidatedParams& params);

}  // namespace hdawz::analytics
