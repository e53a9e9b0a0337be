#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "anneal/log_weight.hpp"
#include "anneal/partition_function.hpp"
#include "anneal/rng.hpp"

namespace anneal::testing {

// Explicit Z with a_0 = 1, degree n and ln Z(0) = log_A exactly (up to
// rounding). Shapes rotate between i.i.d. log-normal, binomial-like and
// sparse spikes so that both smooth and lumpy level profiles show up.
inline PartitionFunction random_explicit_z(Rng& rng, std::size_t n, double log_A) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> w(n + 1, kNegInf);
  auto const shape = rng() % 3;
  double const tilt = 4.0 * uniform01(rng) - 2.0;
  for (std::size_t i = 1; i <= n; ++i) {
    auto const id = static_cast<double>(i);
    auto const nd = static_cast<double>(n);
    switch (shape) {
      case 0:
        w[i] = 2.0 * gauss(rng);
        break;
      case 1:
        w[i] = std::lgamma(nd + 1) - std::lgamma(id + 1) - std::lgamma(nd - id + 1) + tilt * id + 0.3 * gauss(rng);
        break;
      default:
        if (uniform01(rng) < 0.3) w[i] = 3.0 * gauss(rng);
        break;
    }
  }
  if (w[n] == kNegInf) w[n] = 0.0;
  // Scale levels 1..n so that sum_{i>=1} a_i = A - 1.
  double const tail = log_sum_exp(std::span<const double>(w).subspan(1));
  double const shift = log_sub(log_A, 0.0) - tail;
  for (std::size_t i = 1; i <= n; ++i) {
    if (w[i] != kNegInf) w[i] += shift;
  }
  w[0] = 0.0;
  return PartitionFunction(std::move(w));
}

// n in [lo_n, hi_n], ln A uniform in [lo_a, hi_a].
inline PartitionFunction random_explicit_z(Rng& rng, std::size_t lo_n, std::size_t hi_n, double lo_a, double hi_a) {
  auto const n = lo_n + static_cast<std::size_t>(uniform_index(rng, hi_n - lo_n + 1));
  double const la = lo_a + (hi_a - lo_a) * uniform01(rng);
  return random_explicit_z(rng, n, la);
}

}  // namespace anneal::testing
