#include "hdawz/mmse.hpp"

#include <cmath>
#include <sstream>

#include "hdawz/analytics.hpp"

namespace hdawz::mmse {

namespace {

// Forward/backward substitution against a lower-triangular factor.
void cholesky_apply(const double l[3][3], int dim, const double* rhs, double* out) {
  double y[3];
  for (int i = 0; i < dim; ++i) {
    double s = rhs[i];
    for (int j = 0; j < i; ++j) s -= l[i][j] * y[j];
    y[i] = s / l[i][i];
  }
  for (int i = dim - 1; i >= 0; --i) {
    double s = y[i];
    for (int j = i + 1; j < dim; ++j) s -= l[j][i] * out[j];
    out[i] = s / l[i][i];
  }
}

}  // namespace

MmseSolution solve(const MmseProblem& problem) {
  const int dim = problem.dim;
  if (dim < 1 || dim > 3)
    raise(ErrorCode::Usage, "estimation problems have 1 to 3 observations");

  double a[3][3] = {};
  double trace = 0.0;
  for (int i = 0; i < dim; ++i) {
    trace += problem.at(i, i);
    for (int j = 0; j <= i; ++j) a[i][j] = problem.at(i, j);
  }
  const double threshold = 1e-10 * trace;

  double l[3][3] = {};
  for (int j = 0; j < dim; ++j) {
    double d = a[j][j];
    for (int k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d >= threshold)) {
      std::ostringstream os;
      os << "observation covariance is numerically singular (pivot " << d
         << " below " << threshold << ")";
      raise(ErrorCode::SingularCovariance, os.str());
    }
    l[j][j] = std::sqrt(d);
    for (int i = j + 1; i < dim; ++i) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }

  double x[3] = {};
  cholesky_apply(l, dim, problem.gamma.data(), x);

  // One refinement pass keeps the residual at rounding level even for
  // badly scaled observation sets.
  double residual[3];
  for (int i = 0; i < dim; ++i) {
    double s = problem.gamma[static_cast<std::size_t>(i)];
    for (int j = 0; j < dim; ++j) {
      const double entry = j <= i ? a[i][j] : a[j][i];
      s -= entry * x[j];
    }
    residual[i] = s;
  }
  double correction[3] = {};
  cholesky_apply(l, dim, residual, correction);

  MmseSolution solution;
  solution.dim = dim;
  double mse = problem.prior_var;
  for (int i = 0; i < dim; ++i) {
    solution.coeffs[static_cast<std::size_t>(i)] = x[i] + correction[i];
    mse -= problem.gamma[static_cast<std::size_t>(i)] *
           solution.coeffs[static_cast<std::size_t>(i)];
  }
  solution.mse = mse > 0.0 ? mse : 0.0;  // rounding guard near perfect estimation
  return solution;
}

MmseProblem separation_problem(const ValidatedParams& params) {
  const auto sep = analytics::separation_coefficients(params);
  const double d = analytics::optimal_distortion(params);
  const double sv2 = params.sigma_v2();
  const double svp2 = params.sigma_vp2();
  const double root = std::sqrt(sep.alpha);

  MmseProblem problem;
  problem.dim = 2;
  problem.at(0, 0) = sep.alpha * sv2 + d;
  problem.at(0, 1) = root * svp2;
  problem.at(1, 0) = root * svp2;
  problem.at(1, 1) = svp2;
  problem.gamma = {root * sv2, svp2, 0.0};
  problem.prior_var = sv2;
  return problem;
}

MmseProblem uncoded_problem(const ValidatedParams& params, const MismatchPoint& point) {
  const double alpha = analytics::uncoded_coefficients(params).alpha;
  const double sv2 = params.sigma_v2();
  const double svp2 = params.sigma_vp2();

  MmseProblem problem;
  problem.dim = 2;
  problem.at(0, 0) = alpha * alpha * sv2 + point.n1a();
  problem.at(0, 1) = alpha * svp2;
  problem.at(1, 0) = alpha * svp2;
  problem.at(1, 1) = svp2;
  problem.gamma = {alpha * sv2, svp2, 0.0};
  problem.prior_var = sv2;
  return problem;
}

MmseProblem hybrid_problem(const ValidatedParams& params, const MismatchPoint& point) {
  const double k = analytics::hybrid_coefficients(params).k;
  const double p = params.p();
  const double sv2 = params.sigma_v2();
  const double svp2 = params.sigma_vp2();

  MmseProblem problem;
  problem.dim = 3;
  problem.at(0, 0) = p + k * k * sv2;
  problem.at(0, 1) = k * svp2;
  problem.at(0, 2) = p;
  problem.at(1, 0) = k * svp2;
  problem.at(1, 1) = svp2;
  problem.at(1, 2) = 0.0;
  problem.at(2, 0) = p;
  problem.at(2, 1) = 0.0;
  problem.at(2, 2) = p + point.n1a();
  problem.gamma = {k * sv2, svp2, 0.0};
  problem.prior_var = sv2;
  return problem;
}

MmseProblem superimposed_problem(const ValidatedParams& params, const MismatchPoint& point) {
  const auto plan = analytics::superimposed_plan(params);
  const double sv2 = params.sigma_v2();
  const double svt2 = sv2 - plan.sigma_ttilde2;

  MmseProblem problem;
  problem.dim = 3;
  problem.prior_var = sv2;

  if (plan.p_hwz == 0.0) {
    // Normalized auxiliary c V + X2* with unit carrier; the channel output
    // carries nothing.
    const double c =
        std::sqrt((std::exp2(2.0 * params.i_eps()) - 1.0) / plan.sigma_ttilde2);
    problem.at(0, 0) = 1.0 + c * c * sv2;
    problem.at(0, 1) = c * svt2;
    problem.at(1, 0) = c * svt2;
    problem.at(1, 1) = svt2;
    problem.at(2, 2) = point.n1a();
    problem.gamma = {c * sv2, svt2, 0.0};
    return problem;
  }

  problem.at(0, 0) = plan.p_hwz + plan.k1 * plan.k1 * sv2;
  problem.at(0, 1) = plan.k1 * svt2;
  problem.at(0, 2) = plan.p_hwz;
  problem.at(1, 0) = plan.k1 * svt2;
  problem.at(1, 1) = svt2;
  problem.at(1, 2) = 0.0;
  problem.at(2, 0) = plan.p_hwz;
  problem.at(2, 1) = 0.0;
  problem.at(2, 2) = plan.p_hwz + point.n1a();
  problem.gamma = {plan.k1 * sv2, svt2, 0.0};
  return problem;
}

}  // namespace hdawz::mmse
