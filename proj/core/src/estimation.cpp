#include "bidegree/estimation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bidegree {

namespace {

void exp_params(const P0Params& p, std::vector<double>& ea, std::vector<double>& eb) {
  const int n = p.size();
  ea.resize(n);
  eb.resize(n);
  for (int i = 0; i < n; ++i) {
    ea[i] = std::exp(p.alpha[i]);
    eb[i] = std::exp(p.beta[i]);
  }
}

void expected_degrees_into(const std::vector<double>& ea, const std::vector<double>& eb,
                           std::vector<double>& out, std::vector<double>& in) {
  const int n = static_cast<int>(ea.size());
  out.assign(n, 0.0);
  in.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double a = ea[i];
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double t = a * eb[j];
      const double pij = t / (1.0 + t);
      row += pij;
      in[j] += pij;
    }
    out[i] = row;
  }
}

double residual_inf_norm(const RealBiSequence& target, const std::vector<double>& exp_out,
                         const std::vector<double>& exp_in) {
  const int n = target.size();
  double r = 0.0;
  for (int i = 0; i < n; ++i) r = std::max(r, std::abs(target.out[i] - exp_out[i]));
  for (int j = 0; j < n - 1; ++j) r = std::max(r, std::abs(target.in[j] - exp_in[j]));
  return r;
}

double theta_inf_norm(const P0Params& p) {
  const int n = p.size();
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(p.alpha[i]));
  for (int j = 0; j < n - 1; ++j) m = std::max(m, std::abs(p.beta[j]));
  return m;
}

}  // namespace

RealBiSequence expected_degrees(const P0Params& params) {
  std::vector<double> ea, eb;
  exp_params(params, ea, eb);
  RealBiSequence e;
  expected_degrees_into(ea, eb, e.out, e.in);
  return e;
}

std::vector<double> residual_f(const P0Params& params, const RealBiSequence& target) {
  const int n = params.size();
  if (target.size() != n) throw std::invalid_argument("residual_f: length mismatch");
  const RealBiSequence e = expected_degrees(params);
  std::vector<double> f(2 * n - 1);
  for (int i = 0; i < n; ++i) f[i] = target.out[i] - e.out[i];
  for (int j = 0; j < n - 1; ++j) f[n + j] = target.in[j] - e.in[j];
  return f;
}

std::vector<double> jacobian_f(const P0Params& params) {
  const int n = params.size();
  const int m = 2 * n - 1;
  std::vector<double> ea, eb;
  exp_params(params, ea, eb);
  std::vector<double> jac(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int r, int c) -> double& { return jac[static_cast<std::size_t>(r) * m + c]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double t = ea[i] * eb[j];
      const double w = t / ((1.0 + t) * (1.0 + t));
      at(i, i) -= w;
      if (j < n - 1) {
        at(i, n + j) = -w;
        at(n + j, i) = -w;
        at(n + j, n + j) -= w;
      }
    }
  }
  return jac;
}

namespace {

// One Newton leg; mutates theta in place. Returns final status.
FitStatus newton_iterate(P0Params& theta, const RealBiSequence& target,
                         const SolverConfig& cfg, int& iters, double& res,
                         std::vector<double>& history) {
  const int n = theta.size();
  const int m = 2 * n - 1;
  std::vector<double> ea, eb, eo, ei;
  for (int k = 0; k < cfg.max_iter_newton; ++k) {
    exp_params(theta, ea, eb);
    expected_degrees_into(ea, eb, eo, ei);
    res = residual_inf_norm(target, eo, ei);
    history.push_back(res);
    if (res <= cfg.tol) return FitStatus::Converged;

    Eigen::MatrixXd v(m, m);
    v.setZero();
    Eigen::VectorXd f(m);
    for (int i = 0; i < n; ++i) f(i) = target.out[i] - eo[i];
    for (int j = 0; j < n - 1; ++j) f(n + j) = target.in[j] - ei[j];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double t = ea[i] * eb[j];
        const double w = t / ((1.0 + t) * (1.0 + t));
        v(i, i) += w;
        if (j < n - 1) {
          v(i, n + j) = w;
          v(n + j, i) = w;
          v(n + j, n + j) += w;
        }
      }
    }
    // theta_{k+1} = theta_k - [F']^{-1} F = theta_k + V^{-1} F
    Eigen::VectorXd delta = v.ldlt().solve(f);
    for (int i = 0; i < n; ++i) theta.alpha[i] += delta(i);
    for (int j = 0; j < n - 1; ++j) theta.beta[j] += delta(n + j);
    ++iters;
    if (theta_inf_norm(theta) > cfg.diverge_threshold) return FitStatus::NonExistent;
  }
  exp_params(theta, ea, eb);
  expected_degrees_into(ea, eb, eo, ei);
  res = residual_inf_norm(target, eo, ei);
  history.push_back(res);
  return res <= cfg.tol ? FitStatus::Converged : FitStatus::MaxIterReached;
}

}  // namespace

FitResult solve(const RealBiSequence& target, const SolverConfig& cfg) {
  const int n = target.size();
  if (n < 2) throw std::invalid_argument("solve: need n >= 2");

  FitResult fit;
  fit.input = target;
  fit.theta_hat.alpha.assign(n, 0.0);
  fit.theta_hat.beta.assign(n, 0.0);

  // Boundary targets force the root to infinity. Only coordinates that enter
  // the 2n-1 system are checked; the dropped in-degree equation leaves
  // target.in[n-1] unconstrained.
  bool boundary = false;
  for (int i = 0; i < n; ++i)
    if (target.out[i] <= 0.0 || target.out[i] >= n - 1) boundary = true;
  for (int j = 0; j < n - 1; ++j)
    if (target.in[j] <= 0.0 || target.in[j] >= n - 1) boundary = true;
  if (boundary) {
    fit.status = FitStatus::NonExistent;
    return fit;
  }

  P0Params& theta = fit.theta_hat;
  if (cfg.logit_warm_start) {
    for (int i = 0; i < n; ++i) {
      const double t = target.out[i];
      theta.alpha[i] = std::clamp(std::log(t / (n - 1 - t)), -10.0, 10.0);
    }
  }

  std::vector<double> history;
  FitStatus status = FitStatus::MaxIterReached;
  double res = 0.0;
  int iters = 0;

  if (cfg.method == SolveMethod::Newton) {
    status = newton_iterate(theta, target, cfg, iters, res, history);
  } else {
    std::vector<double> ea, eb, eo, ei;
    for (int k = 0; k < cfg.max_iter; ++k) {
      exp_params(theta, ea, eb);
      // alpha step: alpha_i <- log t_i+ - log sum_{j!=i} e^b_j/(1+e^(a_i+b_j))
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double a = ea[i];
        for (int j = 0; j < n; ++j)
          if (j != i) s += eb[j] / (1.0 + a * eb[j]);
        theta.alpha[i] = std::log(target.out[i]) - std::log(s);
        ea[i] = std::exp(theta.alpha[i]);
      }
      // beta step (beta_n pinned at 0)
      for (int j = 0; j < n - 1; ++j) {
        double s = 0.0;
        const double b = eb[j];
        for (int i = 0; i < n; ++i)
          if (i != j) s += ea[i] / (1.0 + ea[i] * b);
        theta.beta[j] = std::log(target.in[j]) - std::log(s);
        eb[j] = std::exp(theta.beta[j]);
      }
      ++iters;
      expected_degrees_into(ea, eb, eo, ei);
      res = residual_inf_norm(target, eo, ei);
      history.push_back(res);
      if (res <= cfg.tol) {
        status = FitStatus::Converged;
        break;
      }
      if (theta_inf_norm(theta) > cfg.diverge_threshold) {
        status = FitStatus::NonExistent;
        break;
      }
    }
    if (status == FitStatus::MaxIterReached && res > cfg.tol)
      status = newton_iterate(theta, target, cfg, iters, res, history);
  }

  fit.status = status;
  fit.iterations = iters;
  fit.residual_inf = res;
  fit.residual_history = std::move(history);
  return fit;
}

}  // namespace bidegree
