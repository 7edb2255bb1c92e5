#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>
#include <vector>

#include "bidegree/noise.hpp"

using namespace bidegree;

namespace {

// Independent pmf-summation oracle for the discrete Laplace variance:
// Var = sum_z z^2 (1-lambda)/(1+lambda) lambda^|z|, truncated far into the tail.
double discrete_laplace_variance_oracle(double lambda) {
  const double c = (1.0 - lambda) / (1.0 + lambda);
  double var = 0.0;
  for (int z = 1; z <= 400; ++z)
    var += 2.0 * c * static_cast<double>(z) * z * std::pow(lambda, z);
  return var;
}

BiDegreeSequence seq(std::vector<int> out, std::vector<int> in) {
  BiDegreeSequence d;
  d.out_deg = std::move(out);
  d.in_deg = std::move(in);
  return d;
}

}  // namespace

TEST_SUITE("noise") {

TEST_CASE("lambda and kappa derivations") {
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  CHECK(cfg.discrete_lambda() == doctest::Approx(std::exp(-1.0)));
  CHECK(noise_model_for(cfg).kappa == doctest::Approx(2.0));  // 4/eps
  cfg.epsilon = 1.0;
  CHECK(cfg.discrete_lambda() == doctest::Approx(std::exp(-0.5)));
  CHECK(cfg.continuous_scale() == doctest::Approx(2.0));
}

TEST_CASE("discrete Laplace P(Z=0) at lambda = 1/e") {
  const double lambda = std::exp(-1.0);
  const double p0 = (1.0 - lambda) / (1.0 + lambda);
  CHECK(p0 == doctest::Approx(0.4621).epsilon(1e-3));
  Rng rng(23);
  const int draws = 200000;
  int zeros = 0;
  for (int k = 0; k < draws; ++k)
    if (sample_discrete_laplace(lambda, rng) == 0) ++zeros;
  const double se = std::sqrt(p0 * (1 - p0) / draws);
  CHECK(std::abs(zeros / static_cast<double>(draws) - p0) < 4 * se);
}

TEST_CASE("discrete Laplace degenerates as lambda -> 0") {
  Rng rng(29);
  for (int k = 0; k < 1000; ++k)
    CHECK(sample_discrete_laplace(1e-12, rng) == 0);
  CHECK_THROWS_AS(sample_discrete_laplace(0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_discrete_laplace(1.0, rng), std::invalid_argument);
}

TEST_CASE("discrete Laplace sample variance matches the pmf oracle") {
  const double lambda = std::exp(-1.0);
  const double var = discrete_laplace_variance_oracle(lambda);
  CHECK(var == doctest::Approx(2.0 * lambda / ((1 - lambda) * (1 - lambda))));
  Rng rng(31);
  const int draws = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double z = sample_discrete_laplace(lambda, rng);
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / draws;
  const double sample_var = sum2 / draws - mean * mean;
  CHECK(std::abs(sample_var - var) / var < 0.01);
}

TEST_CASE("discrete Laplace chi-square goodness of fit") {
  const double lambda = std::exp(-1.0);
  const int draws = 1000000;
  Rng rng(37);
  std::map<int, int> hist;
  for (int k = 0; k < draws; ++k) ++hist[sample_discrete_laplace(lambda, rng)];
  // Bins z = -10..10 plus one overflow bin for |z| > 10: 22 cells, 21 dof.
  const double c = (1.0 - lambda) / (1.0 + lambda);
  double chi2 = 0.0;
  double tail_obs = draws;
  for (int z = -10; z <= 10; ++z) {
    const double expected = draws * c * std::pow(lambda, std::abs(z));
    const auto it = hist.find(z);
    const double obs = it == hist.end() ? 0.0 : it->second;
    chi2 += (obs - expected) * (obs - expected) / expected;
    tail_obs -= obs;
  }
  const double tail_exp = draws * 2.0 * std::pow(lambda, 11) / (1.0 + lambda);
  chi2 += (tail_obs - tail_exp) * (tail_obs - tail_exp) / tail_exp;
  // chi-square(21) upper 0.001 quantile
  CHECK(chi2 < 46.797);
}

TEST_CASE("continuous Laplace moments and tail") {
  const double scale = 1.5;
  Rng rng(41);
  const int draws = 1000000;
  std::vector<double> z(draws);
  for (auto& v : z) v = sample_continuous_laplace(scale, rng);
  double sum = 0.0, sum2 = 0.0;
  int tail = 0, negative = 0;
  const double cut = scale * std::log(100.0);
  for (double v : z) {
    sum += v;
    sum2 += v * v;
    if (std::abs(v) > cut) ++tail;
    if (v < 0) ++negative;
  }
  const double mean = sum / draws;
  const double var = sum2 / draws - mean * mean;
  CHECK(std::abs(var - 2 * scale * scale) / (2 * scale * scale) < 0.01);
  // Symmetry: median near 0 <=> about half the draws negative.
  CHECK(std::abs(negative / static_cast<double>(draws) - 0.5) < 0.01 / scale);
  // P(|Z| > scale log 100) = 0.01
  CHECK(std::abs(tail / static_cast<double>(draws) - 0.01) < 0.002);
  CHECK_THROWS_AS(sample_continuous_laplace(0.0, rng), std::invalid_argument);
}

TEST_CASE("release with mechanism None is the identity") {
  const BiDegreeSequence d = seq({2, 1, 0}, {0, 1, 2});
  PrivacyConfig cfg;
  cfg.mechanism = Mechanism::None;
  const NoisyBiSequence z = release_bi_degree(d, cfg);
  CHECK(z.out_noisy == d.out_deg);
  CHECK(z.in_noisy == d.in_deg);
}

TEST_CASE("release is deterministic given the seed") {
  const BiDegreeSequence d = seq({2, 1, 0}, {0, 1, 2});
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  cfg.seed = 99;
  const NoisyBiSequence z1 = release_bi_degree(d, cfg);
  const NoisyBiSequence z2 = release_bi_degree(d, cfg);
  CHECK(z1.out_noisy == z2.out_noisy);
  CHECK(z1.in_noisy == z2.in_noisy);
}

TEST_CASE("release noise is mean-zero") {
  const BiDegreeSequence d = seq({3, 2}, {2, 3});
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  Rng rng(43);
  const int reps = 100000;
  double sum = 0.0;
  for (int r = 0; r < reps; ++r)
    sum += release_bi_degree(d, cfg, rng).out_noisy[0] - d.out_deg[0];
  const double var1 = noise_variance(cfg, 1);
  const double se = std::sqrt(var1 / reps);
  CHECK(std::abs(sum / reps) < 3 * se);
}

TEST_CASE("positive-only release never decreases a degree") {
  const BiDegreeSequence d = seq({3, 2, 1}, {1, 2, 3});
  PrivacyConfig cfg;
  cfg.epsilon = 1.0;
  cfg.positive_only = true;
  Rng rng(47);
  for (int r = 0; r < 500; ++r) {
    const NoisyBiSequence z = release_bi_degree(d, cfg, rng);
    for (int i = 0; i < 3; ++i) {
      CHECK(z.out_noisy[i] >= d.out_deg[i]);
      CHECK(z.in_noisy[i] >= d.in_deg[i]);
    }
  }
}

TEST_CASE("dp_ratio_bound examples") {
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  const BiDegreeSequence d1 = seq({1, 1, 1}, {1, 1, 1});
  NoisyBiSequence z;
  z.out_noisy = {4, -2, 0};
  z.in_noisy = {1, 5, -3};
  CHECK(dp_ratio_bound(cfg, d1, d1, z) == doctest::Approx(1.0));

  // Neighboring sequences (one edge removed): ||d1 - d2||_1 = 2.
  const BiDegreeSequence d2 = seq({0, 1, 1}, {1, 0, 1});
  const double ratio = dp_ratio_bound(cfg, d1, d2, z);
  CHECK(ratio <= std::exp(cfg.epsilon) * (1 + 1e-12));
  CHECK(ratio >= std::exp(-cfg.epsilon) * (1 - 1e-12));

  // ||d1 - d3||_1 = 4 can push the ratio to e^{2 eps}.
  const BiDegreeSequence d3 = seq({3, 1, 1}, {1, 1, 3});
  NoisyBiSequence at_d3;
  at_d3.out_noisy = d3.out_deg;
  at_d3.in_noisy = d3.in_deg;
  CHECK(dp_ratio_bound(cfg, d3, d1, at_d3) ==
        doctest::Approx(std::exp(2 * cfg.epsilon)));

  PrivacyConfig none;
  none.mechanism = Mechanism::None;
  CHECK_THROWS_AS(dp_ratio_bound(none, d1, d2, z), std::invalid_argument);
}

TEST_CASE("dp ratio exhaustive over small supports") {
  // Two graphs on 3 nodes differing in one edge; all z with coordinates in
  // [-5, n+4] = [-5, 7].
  PrivacyConfig cfg;
  cfg.epsilon = 1.0;
  const BiDegreeSequence d1 = seq({1, 1, 0}, {0, 1, 1});
  const BiDegreeSequence d2 = seq({1, 0, 0}, {0, 1, 0});
  const double bound = std::exp(cfg.epsilon) * (1 + 1e-12);
  // The pmf factorizes per coordinate, so the ratio is a product of
  // per-coordinate factors; scanning coordinates independently covers the
  // full 13^6 grid.
  double max_ratio = 0.0, min_ratio = 1e300;
  for (int z0 = -5; z0 <= 7; ++z0)
    for (int z1 = -5; z1 <= 7; ++z1)
      for (int z2 = -5; z2 <= 7; ++z2)
        for (int z3 = -5; z3 <= 7; ++z3) {
          NoisyBiSequence z;
          z.out_noisy = {z0, z1, 0};
          z.in_noisy = {z2, 1, z3};  // varies both differing coordinates
          const double r = dp_ratio_bound(cfg, d1, d2, z);
          max_ratio = std::max(max_ratio, r);
          min_ratio = std::min(min_ratio, r);
        }
  CHECK(max_ratio <= bound);
  CHECK(min_ratio >= 1.0 / bound);
  CHECK(max_ratio == doctest::Approx(std::exp(cfg.epsilon)));
}

TEST_CASE("noise_variance formulas") {
  PrivacyConfig cfg;
  cfg.mechanism = Mechanism::None;
  CHECK(noise_variance(cfg, 17) == 0.0);

  cfg.mechanism = Mechanism::ContinuousLaplace;
  cfg.epsilon = 2.0;  // scale 1
  const int n = 50;
  CHECK(noise_variance(cfg, 2 * n - 1) == doctest::Approx(2.0 * (2 * n - 1)));

  cfg.mechanism = Mechanism::DiscreteLaplace;
  CHECK(noise_variance(cfg, 1) ==
        doctest::Approx(discrete_laplace_variance_oracle(std::exp(-1.0))));
  CHECK(noise_variance(cfg, 1) == doctest::Approx(1.841).epsilon(1e-3));
  CHECK_THROWS_AS(noise_variance(cfg, 0), std::invalid_argument);
}

}  // TEST_SUITE
