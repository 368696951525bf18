#pragma once

#include "hdawz/errors.hpp"

namespace hdawz {

// One transmission design for a Gaussian source sent over a degraded Gaussian
// wiretap channel, with side information at the legitimate receiver.
//
//   p        transmit power constraint
//   n1       designed noise variance of the legitimate (main) channel
//   n2       noise variance of the eavesdropper channel, n2 > n1
//   sigma_v2 source variance, Var(V)
//   sigma_t2 variance of the component unknown to the receiver, Var(T);
//            the receiver observes V' = V - T, so Var(V') = sigma_v2 - sigma_t2
//   i_eps    permitted information leakage rate to the eavesdropper, >= 0
//   rate_r   digital stream rate of the superimposed scheme, 0 <= rate_r <= C
//   rho      source-to-channel bandwidth ratio; only 1.0 is supported
//
// Variances are linear; rates are in bits per channel use.
struct SystemParams {
  double p = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double sigma_v2 = 0.0;
  double sigma_t2 = 0.0;
  double i_eps = 0.0;
  double rate_r = 0.0;
  double rho = 1.0;
};

class ValidatedParams;

// An actual main-channel operating point, noise variance n1a with
// 0 < n1a <= n1 (the channel is never worse than the design).  Obtainable
// only through ValidatedParams, so holding one proves the range check ran.
class MismatchPoint {
 public:
  double n1a() const noexcept { return n1a_; }

 private:
  friend class ValidatedParams;
  explicit MismatchPoint(double n1a) noexcept : n1a_(n1a) {}
  double n1a_;
};

// Parameter set that passed every model invariant.  Construct via validate().
class ValidatedParams {
 public:
  double p() const noexcept { return params_.p; }
  double n1() const noexcept { return params_.n1; }
  double n2() const noexcept { return params_.n2; }
  double sigma_v2() const noexcept { return params_.sigma_v2; }
  double sigma_t2() const noexcept { return params_.sigma_t2; }
  double i_eps() const noexcept { return params_.i_eps; }
  double rate_r() const noexcept { return params_.rate_r; }
  double rho() const noexcept { return params_.rho; }

  // Side information variance Var(V') = sigma_v2 - sigma_t2.
  double sigma_vp2() const noexcept { return sigma_vp2_; }

  // Designed main-channel SNR, p / n1.
  double snr1() const noexcept { return params_.p / params_.n1; }

  const SystemParams& raw() const noexcept { return params_; }

  // Operating point from an actual noise variance; throws MismatchOutOfRange
  // unless 0 < n1a <= n1.
  MismatchPoint at_noise(double n1a) const;

  // Operating point from an actual SNR >= the designed SNR.  p / snr1a can
  // land one ulp above n1 when snr1a equals the designed SNR, so the result
  // is clamped to n1 in that case.
  MismatchPoint at_snr(double snr1a) const;

  // The designed operating point itself, n1a = n1.
  MismatchPoint designed() const { return MismatchPoint(params_.n1); }

 private:
  friend ValidatedParams validate(const SystemParams& params);
  explicit ValidatedParams(const SystemParams& params)
      : params_(params), sigma_vp2_(params.sigma_v2 - params.sigma_t2) {}

  SystemParams params_;
  double sigma_vp2_;
};

// Checks every invariant and throws the first violation:
//   NonPositiveParameter       p, n1, n2, sigma_v2 or sigma_t2 not finite and
//                              positive, or i_eps negative / not finite
//   DegradednessViolation      n2 <= n1
//   SideInfoVarianceViolation  sigma_t2 >= sigma_v2
//   UnsupportedBandwidthRatio  rho != 1
//   RateOutOfRange             rate_r outside [0, C] where C is the secrecy
//                              capacity of the (n1, n2) pair
ValidatedParams validate(const SystemParams& params);

}  // namespace hdawz
