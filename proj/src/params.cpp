#include "hdawz/params.hpp"

#include <cmath>
#include <sstream>

namespace hdawz {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

std::string describe(const char* name, double value) {
  std::ostringstream os;
  os << name << " = " << value;
  return os.str();
}

}  // namespace

MismatchPoint ValidatedParams::at_noise(double n1a) const {
  if (!std::isfinite(n1a) || n1a <= 0.0)
    raise(ErrorCode::MismatchOutOfRange,
          describe("actual noise variance must be finite and positive, got n1a", n1a));
  if (n1a > params_.n1)
    raise(ErrorCode::MismatchOutOfRange,
          describe("actual channel may not be worse than the design, got n1a", n1a));
  return MismatchPoint(n1a);
}

MismatchPoint ValidatedParams::at_snr(double snr1a) const {
  if (!std::isfinite(snr1a) || snr1a <= 0.0)
    raise(ErrorCode::MismatchOutOfRange,
          describe("actual SNR must be finite and positive, got snr1a", snr1a));
  if (snr1a < snr1())
    raise(ErrorCode::MismatchOutOfRange,
          describe("actual SNR must be at least the designed SNR, got snr1a", snr1a));
  const double n1a = params_.p / snr1a;
  return MismatchPoint(n1a < params_.n1 ? n1a : params_.n1);
}

ValidatedParams validate(const SystemParams& params) {
  if (!finite_positive(params.p))
    raise(ErrorCode::NonPositiveParameter, describe("p must be finite and positive, got p", params.p));
  if (!finite_positive(params.n1))
    raise(ErrorCode::NonPositiveParameter, describe("n1 must be finite and positive, got n1", params.n1));
  if (!finite_positive(params.n2))
    raise(ErrorCode::NonPositiveParameter, describe("n2 must be finite and positive, got n2", params.n2));
  if (!finite_positive(params.sigma_v2))
    raise(ErrorCode::NonPositiveParameter,
          describe("sigma_v2 must be finite and positive, got sigma_v2", params.sigma_v2));
  if (!finite_positive(params.sigma_t2))
    raise(ErrorCode::NonPositiveParameter,
          describe("sigma_t2 must be finite and positive, got sigma_t2", params.sigma_t2));
  if (!std::isfinite(params.i_eps) || params.i_eps < 0.0)
    raise(ErrorCode::NonPositiveParameter,
          describe("i_eps must be finite and nonnegative, got i_eps", params.i_eps));
  if (params.n2 <= params.n1)
    raise(ErrorCode::DegradednessViolation,
          describe("eavesdropper channel must be strictly noisier, got n2", params.n2) +
              describe(" with n1", params.n1));
  if (params.sigma_t2 >= params.sigma_v2)
    raise(ErrorCode::SideInfoVarianceViolation,
          describe("sigma_t2 must be strictly below sigma_v2, got sigma_t2", params.sigma_t2) +
              describe(" with sigma_v2", params.sigma_v2));
  if (params.rho != 1.0)
    raise(ErrorCode::UnsupportedBandwidthRatio,
          describe("only bandwidth ratio 1 is supported, got rho", params.rho));

  // Same evaluation as analytics::secrecy_capacity so a rate set to the
  // published capacity always validates.
  const double cap =
      0.5 * std::log2((1.0 + params.p / params.n1) / (1.0 + params.p / params.n2));
  if (!std::isfinite(params.rate_r) || params.rate_r < 0.0 || params.rate_r > cap)
    raise(ErrorCode::RateOutOfRange,
          describe("rate_r must lie in [0, C], got rate_r", params.rate_r) +
              describe(" with C", cap));

  return ValidatedParams(params);
}

}  // namespace hdawz
