#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anneal/beta.hpp"
#include "anneal/errors.hpp"
#include "anneal/rng.hpp"
#include "anneal/samplers.hpp"
#include "anneal/schedule.hpp"

namespace anneal {

// Disjoint cover of {0..n}: [0,0] first, then [b, min(b + floor(b/sqrt(ln A)), n)].
class IntervalPartition {
 public:
  using Interval = std::pair<std::size_t, std::size_t>;

  explicit IntervalPartition(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  // Index of the interval holding `level`.
  std::size_t locate(std::size_t level) const;

 private:
  std::vector<Interval> intervals_;
};

IntervalPartition build_partition(std::size_t n, double log_A);

// 4 sqrt(ln A) ln n.
double partition_size_bound(std::size_t n, double log_A);

enum class AdaptiveMode { Faithful, Desk };

struct AdaptiveConfig {
  double delta_prime = 0.1;
  double B = 3e6;                // certified bound of the output
  double est_threshold = 2000.0;  // step-4 predicate
  AdaptiveMode mode = AdaptiveMode::Desk;
  std::optional<std::uint64_t> desk_s_override;  // desk default 2000
  unsigned workers = 1;
};

// Quantities derived from (n, ln A, |P|). In desk mode ln n and ln ln A are
// clamped to >= 1 wherever they enter, so small instances stay usable.
struct AdaptiveConstants {
  double h = 0.0;
  double delta = 0.0;
  std::uint64_t s = 0;
  int refine = 1;  // ceil(ln ln A), number of geometric points per interval move
};

AdaptiveConstants derive_constants(const AdaptiveConfig& cfg, std::size_t n, double log_A,
                                   std::size_t partition_size);

// ceil(1e7 ln A (ln n + ln ln A)^5 ln(1/delta')).
double q_budget(std::size_t n, double log_A, double delta_prime);

struct OracleCall {
  std::string op;  // find_heavy | is_heavy | est_ratio
  double beta = 0.0;
  std::optional<double> beta2;
  std::uint64_t samples = 0;
};

struct FailureEvent {
  std::string kind;  // HeavyNotFound | SampleStarvation | Stall
  double beta = 0.0;
  std::string detail;
};

struct MoveTally {
  std::size_t optimal = 0;
  std::size_t long_moves = 0;
  std::size_t interval = 0;
  std::size_t interval_emissions = 0;
};

struct RunTranscript {
  std::uint64_t seed = 0;
  std::vector<OracleCall> calls;
  MoveTally moves;
  std::uint64_t total_samples = 0;  // Q
  std::vector<FailureEvent> failures;
  // Starvation inside the step-4 predicate, counted but not fatal.
  std::size_t starved_predicates = 0;

  void record(OracleCall c);
  // One JSON object per line.
  void write_jsonl(std::ostream& os) const;
};

// Heavy test: fraction of s draws at beta landing in I is >= 2h.
bool is_heavy(const IntervalPartition::Interval& I, Beta beta, HamiltonianSampler& sampler, double h,
              std::uint64_t s, Rng& rng, RunTranscript* tr = nullptr, unsigned workers = 1);

struct HeavyNotFound : Error {
  using Error::Error;
};
struct SampleStarvation : Error {
  using Error::Error;
};

// Most frequent interval of P outside `bad` among s draws at beta (ties go
// to the lowest start). Throws HeavyNotFound if its count is below 2hs.
std::size_t find_heavy(Beta beta, const std::vector<bool>& bad, HamiltonianSampler& sampler,
                       const IntervalPartition& P, double h, std::uint64_t s, Rng& rng,
                       RunTranscript* tr = nullptr, unsigned workers = 1);

// ln EST(I, b1, b2) = ln(U1/U2) + b (b1 - b2), which estimates ln Z(b2)/Z(b1).
// U2 = 0 throws SampleStarvation; U1 = 0 gives -inf.
double log_est_ratio(const IntervalPartition::Interval& I, Beta b1, Beta b2, HamiltonianSampler& sampler,
                     std::uint64_t s, Rng& rng, RunTranscript* tr = nullptr, unsigned workers = 1);

struct AdaptiveResult {
  std::optional<CoolingSchedule> schedule;  // empty on failure
  RunTranscript transcript;
  IntervalPartition partition{std::vector<IntervalPartition::Interval>{{0, 0}}};
  AdaptiveConstants constants;
};

// The adaptive schedule loop with optimal / long / interval moves. Needs
// only Hamiltonian samples at arbitrary finite beta, plus n and ln A.
AdaptiveResult print_cooling_schedule(std::size_t n, double log_A, HamiltonianSampler& sampler,
                                      const AdaptiveConfig& cfg, std::uint64_t seed);

}  // namespace anneal
