#pragma once

#include <vector>

#include "bidegree/estimation.hpp"
#include "bidegree/noise.hpp"

namespace bidegree {

/// Fisher information of theta in the p0 model: the (2n-1) x (2n-1) matrix
/// with v_ij = e^(a_i+b_j)/(1+e^(a_i+b_j))^2 cross entries, plus the derived
/// border entries v_{2n,i} and v_{2n,2n}.
struct FisherInfo {
  int n = 0;
  std::vector<double> v;        // (2n-1)^2, row-major
  std::vector<double> border;   // v_{2n,i}, i = 1..2n-1
  double v2n2n = 0.0;

  int dim() const { return 2 * n - 1; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(i) * dim() + j]; }
};

/// Closed-form approximate inverse S of the Fisher information:
/// s_ij = delta_ij / v_ii +- 1/v_{2n,2n} with the block sign pattern.
struct ApproxInverse {
  int n = 0;
  std::vector<double> diag_recip;  // 1/v_ii, length 2n-1
  double v2n2n_recip = 0.0;

  double at(int i, int j) const {
    const double diag = i == j ? diag_recip[i] : 0.0;
    const bool cross = (i < n) != (j < n);
    return diag + (cross ? -v2n2n_recip : v2n2n_recip);
  }
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;
  double center = 0.0;
  double half_width = 0.0;
};

enum class StatKind { Xi, Zeta, Eta };

FisherInfo fisher_info(const P0Params& params);

/// Just the v_ii diagonal (length 2n-1) and v_{2n,2n}; O(n^2) without
/// materializing the matrix. Used in replication loops.
std::pair<std::vector<double>, double> fisher_diagonals(const P0Params& params);

ApproxInverse approx_inverse_s(const FisherInfo& v);

/// Two-sided normal CI for theta_i - theta_j (0-indexed positions into
/// theta = (alpha_1..alpha_n, beta_1..beta_{n-1})):
/// half-width z_{(1+level)/2} * sqrt(1/v_ii + 1/v_jj) with v evaluated at
/// theta_hat. Requires a converged fit and i != j.
ConfidenceInterval pairwise_ci(const FitResult& fit, int i, int j, double level);

/// Asymptotic variance of theta_hat_i including the additional noise factor:
/// 1/v_ii + 1/v_{2n,2n} + s_n^2/v_{2n,2n}^2 with s_n^2 = noise_variance(cfg, 2n-1).
double single_variance(const FitResult& fit, int i, const PrivacyConfig& cfg);

/// Standardized simulation statistics, e.g.
/// xi_ij = [a_i - a_j - (a*_i - a*_j)] / sqrt(1/v_ii + 1/v_jj).
/// i, j are 0-indexed node positions.
double standardized_stat(const FitResult& fit, StatKind kind, int i, int j,
                         const P0Params& true_theta);

}  // namespace bidegree
