#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anneal/beta.hpp"
#include "anneal/partition_function.hpp"
#include "anneal/rng.hpp"

namespace anneal {

// Oracle returning H(X) for X ~ mu_beta (or an approximation of it). The
// schedule algorithms only ever see Hamiltonian values.
class HamiltonianSampler {
 public:
  virtual ~HamiltonianSampler() = default;

  virtual std::size_t degree() const = 0;

  int sample(Beta beta, Rng& rng);

  // Draws `count` values. A single seed is taken from `rng` and chunk c of
  // kChunk draws uses the stream split_seed(seed, c), so the result does not
  // depend on `workers`. Samplers that are not thread safe ignore `workers`.
  std::vector<int> sample_batch(Beta beta, std::size_t count, Rng& rng, unsigned workers = 1);

  // Total values drawn through this instance.
  std::uint64_t draws() const { return draws_.load(); }

  static constexpr std::size_t kChunk = 4096;

 protected:
  virtual void fill(Beta beta, std::span<int> out, Rng& rng) = 0;
  virtual bool thread_safe() const { return false; }

 private:
  std::atomic<std::uint64_t> draws_{0};
};

// Samples levels exactly by inverse CDF over a_i e^{-i beta} / Z(beta).
class ExactSampler final : public HamiltonianSampler {
 public:
  explicit ExactSampler(PartitionFunction z) : z_(std::move(z)) {}

  std::size_t degree() const override { return z_.degree(); }
  const PartitionFunction& partition_function() const { return z_; }

  // Level probabilities at beta, the distribution every draw follows.
  std::vector<double> level_probabilities(Beta beta) const;

 protected:
  void fill(Beta beta, std::span<int> out, Rng& rng) override;
  bool thread_safe() const override { return true; }

 private:
  PartitionFunction z_;
};

}  // namespace anneal
