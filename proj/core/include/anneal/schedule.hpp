#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "anneal/beta.hpp"
#include "anneal/partition_function.hpp"

namespace anneal {

// How a step of a schedule was produced.
enum class Move { Optimal, Long, Interval, NonAdaptive, Augmented, Final };

std::string_view to_string(Move m);
Move parse_move(std::string_view s);

// Strictly increasing inverse temperatures 0 = b_0 < ... < b_l = inf.
// moves[i] tags the step betas[i] -> betas[i+1].
class CoolingSchedule {
 public:
  CoolingSchedule(std::vector<Beta> betas, std::vector<Move> moves);
  // Every step tagged with the same move.
  static CoolingSchedule uniform_tag(std::vector<Beta> betas, Move tag);

  const std::vector<Beta>& betas() const { return betas_; }
  const std::vector<Move>& moves() const { return moves_; }
  // Number of steps l.
  std::size_t length() const { return moves_.size(); }

  // Cuts the schedule at a finite target: the first point >= target is
  // replaced by the target and later points are dropped. Result ends at the
  // target rather than infinity, so it is returned as a plain beta list.
  std::vector<Beta> truncated_at(Beta target) const;

  friend bool operator==(const CoolingSchedule&, const CoolingSchedule&) = default;

 private:
  std::vector<Beta> betas_;
  std::vector<Move> moves_;
};

struct StepCheck {
  std::size_t index = 0;  // step betas[index] -> betas[index + 1]
  Beta from;
  Beta to;
  double log_forward = 0.0;  // ln of the forward Chebyshev ratio
  double log_reverse = 0.0;  // ln of the reverse ratio (reversible checks only)
  bool forward_ok = true;
  bool reverse_ok = true;
};

struct VerificationReport {
  bool passed = true;
  double log_bound = 0.0;
  double worst_log_ratio = kNegInf;
  std::size_t worst_index = 0;
  std::vector<StepCheck> steps;
};

// Checks Z(2b_{i+1} - b_i) Z(b_i) / Z(b_{i+1})^2 <= B for every step,
// comparing in log space with additive slack.
VerificationReport verify_schedule(const PartitionFunction& z, const CoolingSchedule& s, double bound,
                                   double log_slack = 1e-9);

// Adds the reverse condition Z(2b_i - b_{i+1}) Z(b_{i+1}) / Z(b_i)^2 <= B.
// The final step into infinity is exempt from the reverse check: the reverse
// ratio there is infinite for every non-constant Z.
VerificationReport verify_reversible(const PartitionFunction& z, const CoolingSchedule& s,
                                     double bound, double log_slack = 1e-9);

}  // namespace anneal
