#pragma once

#include <array>

#include "hdawz/params.hpp"

namespace hdawz::mmse {

// One linear estimation task: estimate the source V from an observation
// vector O with covariance lambda (row-major, dim x dim, symmetric positive
// definite) and cross-correlation gamma = E[V O].  prior_var is Var(V).
struct MmseProblem {
  int dim = 0;
  std::array<double, 9> lambda{};
  std::array<double, 3> gamma{};
  double prior_var = 0.0;

  double at(int row, int col) const { return lambda[static_cast<std::size_t>(row * dim + col)]; }
  double& at(int row, int col) { return lambda[static_cast<std::size_t>(row * dim + col)]; }
};

struct MmseSolution {
  int dim = 0;
  std::array<double, 3> coeffs{};  // estimator weights, V_hat = coeffs . O
  double mse = 0.0;                // prior_var - gamma . coeffs
};

// Direct solve of lambda * coeffs = gamma by Cholesky factorization with one
// refinement pass.  Only the lower triangle of lambda is read.  Throws
// SingularCovariance when a pivot falls below 1e-10 times the trace.
MmseSolution solve(const MmseProblem& problem);

// Estimation problems of the four schemes at an operating point, observations
// listed in the order the estimator weights apply:
//   separation    (decoded codeword U, side information V')           dim 2
//   uncoded       (channel output Y, side information V')             dim 2
//   hybrid        (auxiliary U, side information V', channel output)  dim 3
//   superimposed  (auxiliary U, digital estimate V~, channel output)  dim 3
// The superimposed problem with zero hybrid power switches to the normalized
// auxiliary U / sqrt(p_hwz), the well-posed limit of the vanishing-power plan.
MmseProblem separation_problem(const ValidatedParams& params);
MmseProblem uncoded_problem(const ValidatedParams& params, const MismatchPoint& point);
MmseProblem hybrid_problem(const ValidatedParams& params, const MismatchPoint& point);
MmseProblem superimposed_problem(const ValidatedParams& params, const MismatchPoint& point);

}  // namespace hdawz::mmse
