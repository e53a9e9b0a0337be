#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anneal/beta.hpp"
#include "anneal/models.hpp"
#include "anneal/rng.hpp"
#include "anneal/samplers.hpp"

namespace anneal {

// One transition of the matching chain with weight w(M) = e^{-beta |M|}:
// pick an edge e = (u, v) uniformly, form the remove / add / slide proposal,
// and accept it with probability min{1, w(M')/w(M)} / 2. `state` holds per-edge
// 0/1 indicators and must be a matching.
void matching_chain_step(const Graph& g, Configuration& state, Beta beta, Rng& rng);

// One heat-bath single-site update targeting mu_beta, for colorings, the
// Ising grid and the hard-core model. At beta = inf the new value is uniform
// over the values of minimal local cost (weighted by fugacity for hard-core).
void glauber_step(const GibbsSystem& sys, Configuration& state, Beta beta, Rng& rng);

// Exact one-step transition distribution of chain_step from `state`, merged
// by target configuration. Used to check detailed balance without sampling.
std::vector<std::pair<Configuration, double>> transition_row(const GibbsSystem& sys, const Configuration& state,
                                                             Beta beta);

// Dispatches to the chain appropriate for the system.
void chain_step(const GibbsSystem& sys, Configuration& state, Beta beta, Rng& rng);

// Deterministic feasible starting configuration: empty matching / empty set,
// all-zero spins, and a greedy proper coloring when one exists.
Configuration fixed_start_state(const GibbsSystem& sys);

// Configuration drawn from mu_0. Exact for spin systems. Matchings have no
// direct mu_0 sampler: the empty matching is returned and `needs_burn_in`
// is set.
Configuration sample_mu0(const GibbsSystem& sys, Rng& rng, bool* needs_burn_in = nullptr);

// Relaxation-time defaults taken from the cited mixing bounds:
// matchings |V||E|, colorings k|V|ln|V|, otherwise |V|ln|V| (at least 1).
std::uint64_t default_tau2(const GibbsSystem& sys);

// Steps per draw for a cold start: tau2 ln(1/pi_min) with pi_min taken at
// beta = 0, i.e. tau2 * ceil(ln |Omega|). A fixed start needs the mixing
// time, not just the relaxation time.
std::uint64_t default_cold_steps(const GibbsSystem& sys);

enum class StartMode { Cold, Warm };

struct ChainConfig {
  std::uint64_t steps_per_sample = 1;  // tau_2 or mixing-time surrogate
  std::uint64_t seed = 0;
  StartMode mode = StartMode::Cold;
};

// Warm states produced by the priming pass along a non-adaptive schedule:
// one configuration per finite inverse temperature.
struct WarmStates {
  std::vector<Beta> betas;
  std::vector<Configuration> states;
  std::uint64_t chain_steps = 0;

  // Index of the closest finite beta (ties go to the smaller one).
  std::size_t closest(Beta beta) const;
};

// Starts from a mu_0 sample and runs tau2 steps at each successive finite
// beta of `schedule`, keeping the state reached at each one.
WarmStates warm_start_driver(const GibbsSystem& sys, const std::vector<Beta>& schedule,
                             std::uint64_t tau2, Rng& rng);

// Hamiltonian sampler backed by a Markov chain. Cold start runs
// steps_per_sample transitions from fixed_start_state() for every draw; warm
// start keeps one persistent state per warm bucket and advances it
// steps_per_sample transitions per draw at the requested beta.
class McmcSampler final : public HamiltonianSampler {
 public:
  McmcSampler(GibbsSystem sys, ChainConfig cfg);
  // Warm mode with an explicit bucket schedule (e.g. the non-adaptive one).
  McmcSampler(GibbsSystem sys, ChainConfig cfg, const std::vector<Beta>& warm_schedule);

  std::size_t degree() const override { return sys_.degree(); }
  const ChainConfig& config() const { return cfg_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Chain transitions executed so far, priming included.
  std::uint64_t chain_steps() const { return chain_steps_; }
  const WarmStates* warm_states() const { return warm_ ? &*warm_ : nullptr; }

 protected:
  void fill(Beta beta, std::span<int> out, Rng& rng) override;

 private:
  int draw_one(Beta beta, Rng& rng);

  GibbsSystem sys_;
  ChainConfig cfg_;
  std::vector<std::string> warnings_;
  Configuration cold_start_;
  std::optional<WarmStates> warm_;
  std::uint64_t chain_steps_ = 0;
};

}  // namespace anneal
