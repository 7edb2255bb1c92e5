#include "bidegree/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace bidegree {

double PrivacyConfig::discrete_lambda() const {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  return std::exp(-epsilon / 2.0);
}

double PrivacyConfig::continuous_scale() const {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  return 2.0 / epsilon;
}

NoiseModel noise_model_for(const PrivacyConfig& cfg) {
  NoiseModel m;
  switch (cfg.mechanism) {
    case Mechanism::None:
      m.kappa = 0.0;
      break;
    case Mechanism::DiscreteLaplace:
      // kappa = -2/log(lambda) = 4/epsilon
      m.kappa = 4.0 / cfg.epsilon;
      break;
    case Mechanism::ContinuousLaplace:
      m.kappa = cfg.continuous_scale();
      break;
  }
  return m;
}

namespace {

// Geometric(1 - lambda) failure count: P(G=g) = (1-lambda) * lambda^g.
int sample_geometric(double lambda, Rng& rng) {
  const double u = rng.next_open01();
  return static_cast<int>(std::floor(std::log(u) / std::log(lambda)));
}

}  // namespace

int sample_discrete_laplace(double lambda, Rng& rng) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("discrete Laplace requires lambda in (0,1)");
  return sample_geometric(lambda, rng) - sample_geometric(lambda, rng);
}

double sample_continuous_laplace(double scale, Rng& rng) {
  if (!(scale > 0.0))
    throw std::invalid_argument("Laplace scale must be positive");
  const double u = rng.next_open01();
  return u < 0.5 ? scale * std::log(2.0 * u) : -scale * std::log(2.0 * (1.0 - u));
}

NoisyBiSequence release_bi_degree(const BiDegreeSequence& d, const PrivacyConfig& cfg, Rng& rng) {
  const int n = d.size();
  NoisyBiSequence z;
  z.out_noisy.resize(n);
  z.in_noisy.resize(n);
  if (cfg.mechanism == Mechanism::None) {
    for (int i = 0; i < n; ++i) {
      z.out_noisy[i] = d.out_deg[i];
      z.in_noisy[i] = d.in_deg[i];
    }
    return z;
  }
  const double lambda = cfg.discrete_lambda();
  const double scale = cfg.continuous_scale();
  auto draw = [&]() -> int {
    int e;
    if (cfg.mechanism == Mechanism::DiscreteLaplace) {
      e = sample_discrete_laplace(lambda, rng);
    } else {
      e = static_cast<int>(std::lround(sample_continuous_laplace(scale, rng)));
    }
    return cfg.positive_only ? std::abs(e) : e;
  };
  for (int i = 0; i < n; ++i) {
    z.out_noisy[i] = d.out_deg[i] + draw();
    z.in_noisy[i] = d.in_deg[i] + draw();
  }
  return z;
}

NoisyBiSequence release_bi_degree(const BiDegreeSequence& d, const PrivacyConfig& cfg) {
  Rng rng(cfg.seed);
  return release_bi_degree(d, cfg, rng);
}

double dp_ratio_bound(const PrivacyConfig& cfg, const BiDegreeSequence& d1,
                      const BiDegreeSequence& d2, const NoisyBiSequence& z) {
  if (cfg.mechanism == Mechanism::None)
    throw std::invalid_argument("mechanism None has no output distribution");
  const long long l1 = dist_l1(z, d1);
  const long long l2 = dist_l1(z, d2);
  if (cfg.mechanism == Mechanism::DiscreteLaplace) {
    // Q(z|d) proportional to lambda^||z-d||_1, lambda = e^(-eps/2)
    return std::exp(-cfg.epsilon / 2.0 * static_cast<double>(l1 - l2));
  }
  return std::exp(static_cast<double>(l2 - l1) / cfg.continuous_scale());
}

double noise_variance(const PrivacyConfig& cfg, int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  switch (cfg.mechanism) {
    case Mechanism::None:
      return 0.0;
    case Mechanism::DiscreteLaplace: {
      const double lambda = cfg.discrete_lambda();
      return count * 2.0 * lambda / ((1.0 - lambda) * (1.0 - lambda));
    }
    case Mechanism::ContinuousLaplace: {
      const double s = cfg.continuous_scale();
      return count * 2.0 * s * s;
    }
  }
  return 0.0;
}

}  // namespace bidegree
