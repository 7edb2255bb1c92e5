#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bidegree/estimation.hpp"
#include "bidegree/inference.hpp"
#include "bidegree/noise.hpp"

namespace bidegree {

enum class EpsilonRule { Fixed, LogOverN4, LogOverN2 };  // eps, log n/n^(1/4), log n/n^(1/2)
enum class EstimatorType { NonDenoised, Denoised };

/// Parameter-range schedules L in {0, log log n, sqrt(log n), log n}.
enum class ParamSchedule { Zero, LogLog, SqrtLog, Log };

double schedule_value(ParamSchedule s, int n);
std::string schedule_label(ParamSchedule s);

/// Linear true-parameter form: alpha*_{i+1} = (n-1-i) L/(n-1), beta* = alpha*
/// except beta*_n = 0.
P0Params linear_params(int n, double L);

struct ExperimentConfig {
  int n = 100;
  double L = 0.0;
  EpsilonRule epsilon_rule = EpsilonRule::Fixed;
  double epsilon_value = 2.0;  // used when rule == Fixed
  Mechanism mechanism = Mechanism::DiscreteLaplace;
  int replications = 10000;
  EstimatorType estimator = EstimatorType::NonDenoised;
  std::vector<std::pair<int, int>> pairs;  // 1-indexed alpha pairs
  double level = 0.95;
  std::uint64_t seed = 1;
  SolverConfig solver{1e-7, 300, 50, 30.0, SolveMethod::FixedPoint, false};

  double epsilon() const;
};

struct CoverageRow {
  int n = 0;
  std::pair<int, int> pair;
  EstimatorType estimator = EstimatorType::NonDenoised;
  double L = 0.0;
  double coverage_pct = 0.0;        // NaN when no fit existed
  double mean_half_width = 0.0;     // NaN when no fit existed
  double nonexistence_pct = 0.0;
};

/// Per replication: build theta*, sample graph, release z, optionally denoise,
/// fit, and record CI hit/miss per pair. Coverage and width are conditional on
/// the estimate existing. Deterministic in (config, seed) for any thread count.
std::vector<CoverageRow> run_coverage(const ExperimentConfig& cfg);

/// Mean over replications of ||d - z||_inf. The distance depends only on the
/// noise draws (z - d = e), so no graph sampling is involved.
double run_distance(const ExperimentConfig& cfg);

enum class QQStatistic { Xi, Zeta, Eta, AlphaSigma1, AlphaSigma2 };

struct QQTable {
  std::vector<double> theoretical;  // normal quantiles at (k - 0.5)/R
  std::vector<double> empirical;    // sorted standardized statistics
};

/// Sorted standardized statistics for the (i, j) pair of cfg.pairs.front()
/// (or alpha_1 for the AlphaSigma kinds) paired with standard-normal plotting
/// positions. Only replications with an existing estimate contribute.
QQTable export_qq(const ExperimentConfig& cfg, QQStatistic statistic);

/// Thread budget: min(hardware, BIDEGREE_THREADS when set).
int simulation_threads();

}  // namespace bidegree
