#include "bidegree/inference.hpp"

#include <cmath>
#include <stdexcept>

#include "bidegree/stats.hpp"

namespace bidegree {

namespace {

inline double cross_weight(double ai, double bj) {
  const double t = std::exp(ai + bj);
  return t / ((1.0 + t) * (1.0 + t));
}

}  // namespace

FisherInfo fisher_info(const P0Params& params) {
  const int n = params.size();
  const int m = 2 * n - 1;
  FisherInfo fi;
  fi.n = n;
  fi.v.assign(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int r, int c) -> double& { return fi.v[static_cast<std::size_t>(r) * m + c]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = cross_weight(params.alpha[i], params.beta[j]);
      at(i, i) += w;
      if (j < n - 1) {
        at(i, n + j) = w;
        at(n + j, i) = w;
        at(n + j, n + j) += w;
      }
    }
  }
  // Border entries: v_{2n,i} = v_ii - sum_{j != i} v_ij; v_{2n,2n} = sum_i v_{2n,i}.
  fi.border.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double row = 0.0;
    for (int j = 0; j < m; ++j)
      if (j != i) row += fi.at(i, j);
    fi.border[i] = fi.at(i, i) - row;
    fi.v2n2n += fi.border[i];
  }
  return fi;
}

std::pair<std::vector<double>, double> fisher_diagonals(const P0Params& params) {
  const int n = params.size();
  std::vector<double> diag(2 * n - 1, 0.0);
  double v2n2n = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = cross_weight(params.alpha[i], params.beta[j]);
      diag[i] += w;
      if (j < n - 1) diag[n + j] += w;
      // v_{2n,i} = v_{i,n} for i < n and 0 otherwise, so v_{2n,2n} is the
      // total cross weight into column n.
      if (j == n - 1) v2n2n += w;
    }
  }
  return {std::move(diag), v2n2n};
}

ApproxInverse approx_inverse_s(const FisherInfo& v) {
  ApproxInverse s;
  s.n = v.n;
  const int m = v.dim();
  s.diag_recip.resize(m);
  for (int i = 0; i < m; ++i) s.diag_recip[i] = 1.0 / v.at(i, i);
  s.v2n2n_recip = 1.0 / v.v2n2n;
  return s;
}

ConfidenceInterval pairwise_ci(const FitResult& fit, int i, int j, double level) {
  if (fit.status != FitStatus::Converged)
    throw std::invalid_argument("pairwise_ci: fit did not converge");
  if (i == j) throw std::invalid_argument("pairwise_ci: i and j must differ");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("pairwise_ci: level in (0,1)");
  const int n = fit.theta_hat.size();
  auto theta_at = [&](int k) {
    return k < n ? fit.theta_hat.alpha[k] : fit.theta_hat.beta[k - n];
  };
  auto [diag, v2n2n] = fisher_diagonals(fit.theta_hat);
  (void)v2n2n;
  ConfidenceInterval ci;
  ci.level = level;
  ci.center = theta_at(i) - theta_at(j);
  const double z = normal_quantile(0.5 * (1.0 + level));
  ci.half_width = z * std::sqrt(1.0 / diag[i] + 1.0 / diag[j]);
  ci.lower = ci.center - ci.half_width;
  ci.upper = ci.center + ci.half_width;
  return ci;
}

double single_variance(const FitResult& fit, int i, const PrivacyConfig& cfg) {
  if (fit.status != FitStatus::Converged)
    throw std::invalid_argument("single_variance: fit did not converge");
  const int n = fit.theta_hat.size();
  auto [diag, v2n2n] = fisher_diagonals(fit.theta_hat);
  const double sn2 =
      cfg.mechanism == Mechanism::None ? 0.0 : noise_variance(cfg, 2 * n - 1);
  return 1.0 / diag[i] + 1.0 / v2n2n + sn2 / (v2n2n * v2n2n);
}

double standardized_stat(const FitResult& fit, StatKind kind, int i, int j,
                         const P0Params& true_theta) {
  if (fit.status != FitStatus::Converged)
    throw std::invalid_argument("standardized_stat: fit did not converge");
  const int n = fit.theta_hat.size();
  auto [diag, v2n2n] = fisher_diagonals(fit.theta_hat);
  (void)v2n2n;
  const auto& th = fit.theta_hat;
  double num = 0.0, var = 0.0;
  switch (kind) {
    case StatKind::Xi:
      num = th.alpha[i] - th.alpha[j] - (true_theta.alpha[i] - true_theta.alpha[j]);
      var = 1.0 / diag[i] + 1.0 / diag[j];
      break;
    case StatKind::Zeta:
      num = th.alpha[i] + th.beta[j] - true_theta.alpha[i] - true_theta.beta[j];
      var = 1.0 / diag[i] + 1.0 / diag[n + j];
      break;
    case StatKind::Eta:
      num = th.beta[i] - th.beta[j] - (true_theta.beta[i] - true_theta.beta[j]);
      var = 1.0 / diag[n + i] + 1.0 / diag[n + j];
      break;
  }
  return num / std::sqrt(var);
}

}  // namespace bidegree
