#include "anneal/partition_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "anneal/errors.hpp"

namespace anneal {

Beta::Beta(double value) : value_(value) {
  if (!(value >= 0.0) || std::isinf(value)) {
    throw InvalidArgument("Beta: expected a finite nonnegative value, got " + format_log(value) +
                          " (use Beta::infinity() for infinity)");
  }
}

double Beta::value() const {
  if (infinite_) throw InvalidArgument("Beta::value() called on infinity");
  return value_;
}

std::string to_string(Beta b) { return b.is_infinite() ? "inf" : format_log(b.value()); }

PartitionFunction::PartitionFunction(std::vector<double> log_coeffs)
    : log_coeffs_(std::move(log_coeffs)) {
  if (log_coeffs_.empty()) throw InvalidArgument("PartitionFunction: need at least one coefficient");
  for (double c : log_coeffs_) {
    LogWeight{c};  // validates
  }
  if (!(log_coeffs_[0] >= 0.0)) {
    throw InvalidArgument("PartitionFunction: a_0 must be >= 1 (ln a_0 = " +
                          format_log(log_coeffs_[0]) + ")");
  }
}

PartitionFunction PartitionFunction::from_counts(std::span<const double> counts) {
  std::vector<double> logs;
  logs.reserve(counts.size());
  for (double c : counts) logs.push_back(LogWeight::from_linear(c).log());
  return PartitionFunction(std::move(logs));
}

double PartitionFunction::log_z(double x) const {
  // Max-extraction inline; avoids a temporary per evaluation.
  double hi = kNegInf;
  for (std::size_t i = 0; i < log_coeffs_.size(); ++i) {
    if (log_coeffs_[i] == kNegInf) continue;
    hi = std::max(hi, log_coeffs_[i] - static_cast<double>(i) * x);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < log_coeffs_.size(); ++i) {
    if (log_coeffs_[i] == kNegInf) continue;
    sum += std::exp(log_coeffs_[i] - static_cast<double>(i) * x - hi);
  }
  return hi + std::log(sum);
}

double PartitionFunction::log_z(Beta beta) const {
  return beta.is_infinite() ? log_coeffs_[0] : log_z(beta.value());
}

double PartitionFunction::f_prime(double x) const {
  double num = kNegInf;
  for (std::size_t i = 1; i < log_coeffs_.size(); ++i) {
    if (log_coeffs_[i] == kNegInf) continue;
    num = log_add(num, log_coeffs_[i] + std::log(static_cast<double>(i)) -
                           static_cast<double>(i) * x);
  }
  if (num == kNegInf) return 0.0;
  return -std::exp(num - log_z(x));
}

double PartitionFunction::log_interval_mass(std::size_t lo, std::size_t hi, Beta beta) const {
  if (lo > hi || hi > degree()) throw InvalidArgument("log_interval_mass: bad interval");
  if (beta.is_infinite()) return lo == 0 ? 0.0 : kNegInf;
  double const x = beta.value();
  double num = kNegInf;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (log_coeffs_[i] == kNegInf) continue;
    num = log_add(num, log_coeffs_[i] - static_cast<double>(i) * x);
  }
  return num == kNegInf ? kNegInf : num - log_z(x);
}

PartitionFunction PartitionFunction::scaled(double log_c) const {
  std::vector<double> out = log_coeffs_;
  for (double& c : out) {
    if (c != kNegInf) c += log_c;
  }
  // Normalization may land a hair below zero through rounding.
  if (out[0] < 0.0 && out[0] > -1e-12) out[0] = 0.0;
  return PartitionFunction(std::move(out));
}

bool PartitionFunction::is_constant() const {
  for (std::size_t i = 1; i < log_coeffs_.size(); ++i) {
    if (log_coeffs_[i] != kNegInf) return false;
  }
  return true;
}

double log_chebyshev_ratio(const PartitionFunction& z, Beta from, Beta to) {
  if (to < from) throw InvalidArgument("log_chebyshev_ratio: requires from <= to");
  if (to.is_infinite()) {
    // 2 * inf - b = inf, so the ratio collapses to Z(b) / Z(inf).
    return from.is_infinite() ? 0.0 : z.log_z(from) - z.log_z_inf();
  }
  double const b = from.value();
  double const bp = to.value();
  return z.log_z(2.0 * bp - b) + z.log_z(b) - 2.0 * z.log_z(bp);
}

double log_reverse_ratio(const PartitionFunction& z, Beta from, Beta to) {
  if (to < from) throw InvalidArgument("log_reverse_ratio: requires from <= to");
  if (from.is_infinite()) return 0.0;
  if (to.is_infinite()) {
    // Z(2b - inf) diverges unless only level 0 carries mass.
    return z.is_constant() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  double const b = from.value();
  double const bp = to.value();
  return z.log_z(2.0 * b - bp) + z.log_z(bp) - 2.0 * z.log_z(b);
}

}  // namespace anneal
