#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "latreg/dataset.hpp"
#include "latreg/errors.hpp"
#include "latreg/means.hpp"

namespace latreg {

struct SimulationParams {
  std::uint64_t seed = 1;
  std::size_t n = 1000;
  double mu = 100.0;
  double sigma = 1.0;
  std::size_t trials = 100;

  void validate() const {
    if (n < 2) throw PreconditionViolation("simulation needs n >= 2");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw PreconditionViolation("sigma must be > 0");
    if (!std::isfinite(mu)) throw PreconditionViolation("mu must be finite");
    if (trials < 1) throw PreconditionViolation("simulation needs at least one trial");
  }
};

/// Absolute deviations from the standard mean, aggregated over trials.
struct SimulationSummary {
  double max_weighted_deviation = 0.0;
  double mean_weighted_deviation = 0.0;
  double max_self_weighting_deviation = 0.0;
  double mean_self_weighting_deviation = 0.0;
};

/// Each trial draws x_i ~ Normal(mu, sigma) and independent weights
/// w_i ~ Uniform(0, 1), then compares sum(wx)/sum(w) and sum(x^2)/sum(x) with
/// the plain mean. The stream is std::mt19937_64 seeded with `seed`; x is
/// drawn for all rows before w within a trial.
inline SimulationSummary simulate_weighted_means(const SimulationParams& params) {
  params.validate();
  std::mt19937_64 gen(params.seed);
  std::normal_distribution<double> normal(params.mu, params.sigma);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  SimulationSummary out;
  double weighted_total = 0.0;
  double self_total = 0.0;
  for (std::size_t t = 0; t < params.trials; ++t) {
    std::vector<double> x(params.n), w(params.n);
    for (auto& v : x) v = normal(gen);
    for (auto& v : w) v = uniform(gen);
    const Dataset data{{"x", std::move(x)}, {"w", std::move(w)}};

    const double mean = standard_mean(data, "x");
    const double weighted = std::abs(weighted_mean(data, "x", "w") - mean);
    const double self = std::abs(self_weighting_mean(data, "x") - mean);
    out.max_weighted_deviation = std::max(out.max_weighted_deviation, weighted);
    out.max_self_weighting_deviation = std::max(out.max_self_weighting_deviation, self);
    weighted_total += weighted;
    self_total += self;
  }
  out.mean_weighted_deviation = weighted_total / static_cast<double>(params.trials);
  out.mean_self_weighting_deviation = self_total / static_cast<double>(params.trials);
  return out;
}

}  // namespace latreg
