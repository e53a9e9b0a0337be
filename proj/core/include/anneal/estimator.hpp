#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anneal/adaptive.hpp"
#include "anneal/beta.hpp"
#include "anneal/models.hpp"
#include "anneal/partition_function.hpp"
#include "anneal/samplers.hpp"
#include "anneal/schedule.hpp"

namespace anneal {

struct RatioEstimate {
  Beta from;
  Beta to;
  double mean = 0.0;  // average of e^{(from - to) H}, estimates Z(to)/Z(from)
  std::uint64_t count = 0;
};

// Mean of `count` draws of W = e^{(b - b') H(X)}, X ~ mu_b. For b' = inf, W is
// the indicator of H = 0.
RatioEstimate sample_ratio(Beta b, Beta b_next, HamiltonianSampler& sampler, std::uint64_t count, Rng& rng,
                           unsigned workers = 1);

// ceil(16 B l / eps^2), guarded against ceil(12800.000000000002) = 12801.
std::uint64_t samples_per_ratio(double B, std::size_t steps, double eps);

struct CountEstimate {
  double log_estimate = kNegInf;
  bool zero = false;  // some S_i was 0; log_estimate is then -inf
  double eps = 0.0;
  double confidence = 0.75;
  std::uint64_t samples = 0;
  std::vector<RatioEstimate> per_ratio;
  std::string note;
};

// log Z(b_0) + sum ln S_i over consecutive points of `betas` (which need not
// end at inf), with samples_per_ratio(B, l, eps) draws per ratio unless
// `per_ratio_cap` is smaller.
CountEstimate product_estimate(std::span<const Beta> betas, HamiltonianSampler& sampler, double log_z_start,
                               double B, double eps, Rng& rng, std::optional<std::uint64_t> per_ratio_cap = {},
                               unsigned workers = 1);

struct WarmCount {
  std::uint64_t K = 0;
  double kappa = 0.0;
};

// K = ceil(512 l / eps^2), kappa = 2^-20 eps^2 / (K^5 l).
WarmCount warm_sample_count(std::size_t steps, double eps);

// P(Binomial(m, p) > m/2): the chance a median of m independent p-correct
// estimates is correct.
double median_confidence(std::size_t m, double p = 0.75);

// Median in log space; confidence from median_confidence.
CountEstimate amplify(std::span<const CountEstimate> estimates);

// Largest Chebyshev ratio along `betas`, as B = e^{max}. Exact oracle only.
double certified_B(const PartitionFunction& z, std::span<const Beta> betas);

struct EstimatorConfig {
  double eps = 0.2;
  AdaptiveConfig adaptive;
  // Ratio bound used for the sample count. Unset: certified_B of the
  // schedule when an exact Z is supplied, otherwise adaptive.B.
  std::optional<double> B;
  std::optional<std::uint64_t> per_ratio_cap;
  // Estimate Z(target) instead of Z(inf); infinity-anchored systems only.
  std::optional<Beta> target;
};

struct EndToEndResult {
  CountEstimate estimate;
  AdaptiveResult schedule;
  bool ok = false;
  double B_used = 0.0;
};

// Adaptive schedule followed by the product estimator. For systems anchored
// at zero (matchings) the known end is Z(inf) = 1 and the count is
// Z(inf) / prod S_i.
EndToEndResult end_to_end(const GibbsSystem& sys, HamiltonianSampler& sampler, const EstimatorConfig& cfg,
                          std::uint64_t seed, const PartitionFunction* exact = nullptr);

}  // namespace anneal
