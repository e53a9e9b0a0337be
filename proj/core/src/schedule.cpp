#include "anneal/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "anneal/errors.hpp"

namespace anneal {

std::string_view to_string(Move m) {
  switch (m) {
    case Move::Optimal: return "optimal";
    case Move::Long: return "long";
    case Move::Interval: return "interval";
    case Move::NonAdaptive: return "nonadaptive";
    case Move::Augmented: return "augmented";
    case Move::Final: return "final";
  }
  return "unknown";
}

Move parse_move(std::string_view s) {
  for (Move m : {Move::Optimal, Move::Long, Move::Interval, Move::NonAdaptive, Move::Augmented,
                 Move::Final}) {
    if (to_string(m) == s) return m;
  }
  throw ParseError("unknown move tag '" + std::string(s) + "'");
}

CoolingSchedule::CoolingSchedule(std::vector<Beta> betas, std::vector<Move> moves)
    : betas_(std::move(betas)), moves_(std::move(moves)) {
  if (betas_.size() < 2) throw MalformedSchedule("schedule needs at least the points 0 and inf");
  if (betas_.front() != Beta(0.0)) throw MalformedSchedule("schedule must start at 0");
  if (!betas_.back().is_infinite()) throw MalformedSchedule("schedule must end at inf");
  for (std::size_t i = 0; i + 1 < betas_.size(); ++i) {
    if (!(betas_[i] < betas_[i + 1])) {
      throw MalformedSchedule("schedule not strictly increasing at index " + std::to_string(i));
    }
  }
  if (moves_.size() != betas_.size() - 1) {
    throw MalformedSchedule("expected one move tag per step");
  }
}

CoolingSchedule CoolingSchedule::uniform_tag(std::vector<Beta> betas, Move tag) {
  std::size_t const steps = betas.empty() ? 0 : betas.size() - 1;
  std::vector<Move> moves(steps, tag);
  if (!moves.empty()) moves.back() = Move::Final;
  return CoolingSchedule(std::move(betas), std::move(moves));
}

std::vector<Beta> CoolingSchedule::truncated_at(Beta target) const {
  std::vector<Beta> out;
  for (Beta b : betas_) {
    if (b >= target) {
      out.push_back(target);
      break;
    }
    out.push_back(b);
  }
  return out;
}

namespace {

VerificationReport verify_impl(const PartitionFunction& z, const CoolingSchedule& s, double bound,
                               double log_slack, bool reversible) {
  if (!(bound > 0.0)) throw InvalidArgument("verify: bound must be positive");
  VerificationReport report;
  report.log_bound = std::log(bound);
  auto const& betas = s.betas();
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    StepCheck step;
    step.index = i;
    step.from = betas[i];
    step.to = betas[i + 1];
    step.log_forward = log_chebyshev_ratio(z, step.from, step.to);
    step.forward_ok = step.log_forward <= report.log_bound + log_slack;
    double worst = step.log_forward;
    if (reversible && step.to.is_finite()) {
      step.log_reverse = log_reverse_ratio(z, step.from, step.to);
      step.reverse_ok = step.log_reverse <= report.log_bound + log_slack;
      worst = std::max(worst, step.log_reverse);
    }
    if (worst > report.worst_log_ratio) {
      report.worst_log_ratio = worst;
      report.worst_index = i;
    }
    report.passed = report.passed && step.forward_ok && step.reverse_ok;
    report.steps.push_back(step);
  }
  return report;
}

}  // namespace

VerificationReport verify_schedule(const PartitionFunction& z, const CoolingSchedule& s, double bound,
                                   double log_slack) {
  return verify_impl(z, s, bound, log_slack, false);
}

VerificationReport verify_reversible(const PartitionFunction& z, const CoolingSchedule& s,
                                     double bound, double log_slack) {
  return verify_impl(z, s, bound, log_slack, true);
}

}  // namespace anneal
