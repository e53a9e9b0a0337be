#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>

namespace anneal {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Natural logarithm of a nonnegative real. Zero is represented by -inf.
// NaN and +inf are rejected at construction.
class LogWeight {
 public:
  constexpr LogWeight() = default;
  explicit LogWeight(double log_value);

  static LogWeight zero() { return LogWeight(); }
  static LogWeight one() { return LogWeight(0.0); }
  static LogWeight from_linear(double x);

  double log() const { return value_; }
  double linear() const { return std::exp(value_); }
  bool is_zero() const { return value_ == kNegInf; }

  LogWeight& operator+=(LogWeight other);
  LogWeight& operator*=(LogWeight other);
  friend LogWeight operator+(LogWeight a, LogWeight b) { return a += b; }
  friend LogWeight operator*(LogWeight a, LogWeight b) { return a *= b; }
  friend bool operator==(LogWeight a, LogWeight b) = default;
  friend auto operator<=>(LogWeight a, LogWeight b) { return a.value_ <=> b.value_; }

 private:
  double value_ = kNegInf;
};

// ln(e^a + e^b) with max extraction; either argument may be -inf.
double log_add(double a, double b);

// ln(sum_i e^{x_i}); -inf for an empty span or all -inf entries.
double log_sum_exp(std::span<const double> xs);

// ln(e^a - e^b) for a >= b; -inf when a == b.
double log_sub(double a, double b);

std::string format_log(double x);

}  // namespace anneal
