#include "anneal/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace anneal {

int HamiltonianSampler::sample(Beta beta, Rng& rng) {
  int out = 0;
  fill(beta, std::span<int>(&out, 1), rng);
  draws_ += 1;
  return out;
}

std::vector<int> HamiltonianSampler::sample_batch(Beta beta, std::size_t count, Rng& rng,
                                                  unsigned workers) {
  std::vector<int> out(count);
  std::uint64_t const seed = rng();
  std::size_t const chunks = (count + kChunk - 1) / kChunk;
  auto run_chunk = [&](std::size_t c) {
    Rng stream = make_rng(seed, c);
    std::size_t const lo = c * kChunk;
    std::size_t const hi = std::min(count, lo + kChunk);
    fill(beta, std::span<int>(out.data() + lo, hi - lo), stream);
  };
  if (workers <= 1 || chunks <= 1 || !thread_safe()) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    std::size_t const w = std::min<std::size_t>(workers, chunks);
    for (std::size_t t = 0; t < w; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < chunks; c += w) run_chunk(c);
      });
    }
  }
  draws_ += count;
  return out;
}

std::vector<double> ExactSampler::level_probabilities(Beta beta) const {
  std::size_t const levels = z_.degree() + 1;
  std::vector<double> p(levels, 0.0);
  if (beta.is_infinite()) {
    p[0] = 1.0;
    return p;
  }
  double const log_z = z_.log_z(beta);
  auto coeffs = z_.log_coeffs();
  for (std::size_t i = 0; i < levels; ++i) {
    if (coeffs[i] == kNegInf) continue;
    p[i] = std::exp(coeffs[i] - static_cast<double>(i) * beta.value() - log_z);
  }
  return p;
}

void ExactSampler::fill(Beta beta, std::span<int> out, Rng& rng) {
  auto p = level_probabilities(beta);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  // Absorb rounding so a draw never falls past the last populated level.
  std::size_t last = p.size() - 1;
  while (last > 0 && p[last] == 0.0) --last;
  for (int& x : out) {
    double const u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.begin() + static_cast<std::ptrdiff_t>(last), u);
    x = static_cast<int>(it - cdf.begin());
  }
}

}  // namespace anneal
