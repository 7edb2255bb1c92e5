#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bidegree/graph.hpp"
#include "bidegree/rng.hpp"

namespace bidegree {

enum class Mechanism { None, DiscreteLaplace, ContinuousLaplace };

/// Privacy mechanism configuration. For the discrete Laplace mechanism the
/// noise scale is lambda = exp(-epsilon/2), calibrated to the bi-degree
/// sequence's global sensitivity of 2.
struct PrivacyConfig {
  double epsilon = 2.0;
  Mechanism mechanism = Mechanism::DiscreteLaplace;
  std::uint64_t seed = 0;
  /// When set, |e| is added instead of e (avoids nonpositive noisy degrees).
  bool positive_only = false;

  double discrete_lambda() const;    // exp(-epsilon/2)
  double continuous_scale() const;   // 2/epsilon (sensitivity 2)
};

/// Sub-exponential noise scale kappa; for discrete Laplace kappa = 4/epsilon.
struct NoiseModel {
  double kappa = 0.0;
  std::optional<std::vector<double>> per_coordinate;
};

NoiseModel noise_model_for(const PrivacyConfig& cfg);

/// Draw from the two-sided geometric pmf P(Z=z) = (1-lambda)/(1+lambda) * lambda^|z|.
/// Sampled as the difference of two independent geometric(1-lambda) draws,
/// which matches the pmf exactly in O(1) expected time.
int sample_discrete_laplace(double lambda, Rng& rng);

/// Standard Laplace(0, scale) draw: density e^(-|z|/scale)/(2*scale).
double sample_continuous_laplace(double scale, Rng& rng);

/// Additive-noise release of a bi-degree sequence: z_i = d_i + e_i with 2n
/// independent draws in the fixed order e1+, e1-, e2+, e2-, ...
/// Continuous draws are rounded to the nearest integer (post-processing, so
/// the privacy guarantee is unaffected).
NoisyBiSequence release_bi_degree(const BiDegreeSequence& d, const PrivacyConfig& cfg, Rng& rng);

/// Convenience overload seeding the rng from cfg.seed.
NoisyBiSequence release_bi_degree(const BiDegreeSequence& d, const PrivacyConfig& cfg);

/// Exact pmf ratio Q(z|d1)/Q(z|d2) for the discrete Laplace mechanism:
/// lambda^(||z-d1||_1 - ||z-d2||_1). The DP property tests assert it <= e^eps
/// for neighboring sequences. Mechanism None has no pmf and is rejected.
double dp_ratio_bound(const PrivacyConfig& cfg, const BiDegreeSequence& d1,
                      const BiDegreeSequence& d2, const NoisyBiSequence& z);

/// Var of the sum of `count` independent noise draws (s_n^2 when count = 2n-1).
double noise_variance(const PrivacyConfig& cfg, int count);

}  // namespace bidegree
