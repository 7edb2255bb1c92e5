#pragma once

#include <vector>

#include "bidegree/graph.hpp"

namespace bidegree {

enum class SolveMethod { FixedPoint, Newton };
enum class FitStatus { Converged, NonExistent, MaxIterReached };

struct SolverConfig {
  double tol = 1e-8;             // sup-norm residual tolerance
  int max_iter = 5000;           // fixed-point budget; Newton uses max_iter_newton
  int max_iter_newton = 100;
  double diverge_threshold = 30.0;  // ||theta||_inf beyond which nonexistence is declared
  SolveMethod method = SolveMethod::FixedPoint;
  /// Warm start at clip(log(t/(n-1-t)), +-10) instead of theta = 0.
  bool logit_warm_start = false;
};

struct FitResult {
  P0Params theta_hat;
  FitStatus status = FitStatus::MaxIterReached;
  int iterations = 0;
  double residual_inf = 0.0;
  std::vector<double> residual_history;  // ||F||_inf after each iteration
  RealBiSequence input;
};

/// Expected out-/in-degrees under the p0 model:
/// E[d_i+] = sum_{j != i} e^(a_i+b_j)/(1+e^(a_i+b_j)), and transposed for in.
RealBiSequence expected_degrees(const P0Params& params);

/// Moment-equation residuals, length 2n-1: target_i+ - expected_i+ for
/// i = 1..n, then target_j- - expected_j- for j = 1..n-1 (the last in-degree
/// equation is dropped with the beta_n = 0 identification).
std::vector<double> residual_f(const P0Params& params, const RealBiSequence& target);

/// Jacobian of residual_f with respect to theta = (alpha_1..alpha_n,
/// beta_1..beta_{n-1}), a (2n-1) x (2n-1) dense matrix in row-major order.
/// Its negation is the Fisher information block and lies in L_n(m, M).
std::vector<double> jacobian_f(const P0Params& params);

/// Solves the moment equations for theta. Nonexistence (boundary target
/// coordinates, or iterates escaping past diverge_threshold) and iteration
/// exhaustion are reported as statuses, not exceptions. Under FixedPoint, a
/// run that stalls falls back to Newton before giving up.
FitResult solve(const RealBiSequence& target, const SolverConfig& cfg = {});

inline RealBiSequence to_real(const BiDegreeSequence& d) {
  RealBiSequence t;
  t.out.assign(d.out_deg.begin(), d.out_deg.end());
  t.in.assign(d.in_deg.begin(), d.in_deg.end());
  return t;
}

inline RealBiSequence to_real(const NoisyBiSequence& z) {
  RealBiSequence t;
  t.out.assign(z.out_noisy.begin(), z.out_noisy.end());
  t.in.assign(z.in_noisy.begin(), z.in_noisy.end());
  return t;
}

}  // namespace bidegree
