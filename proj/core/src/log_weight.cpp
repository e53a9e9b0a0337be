#include "anneal/log_weight.hpp"

#include <algorithm>
#include <cstdio>

#include "anneal/errors.hpp"

namespace anneal {

LogWeight::LogWeight(double log_value) : value_(log_value) {
  if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity()) {
    throw InvalidArgument("LogWeight: value must be finite or -inf, got " + format_log(log_value));
  }
}

LogWeight LogWeight::from_linear(double x) {
  if (!(x >= 0.0) || std::isinf(x)) {
    throw InvalidArgument("LogWeight: linear value must be finite and nonnegative");
  }
  return x == 0.0 ? zero() : LogWeight(std::log(x));
}

LogWeight& LogWeight::operator+=(LogWeight other) {
  value_ = log_add(value_, other.value_);
  return *this;
}

LogWeight& LogWeight::operator*=(LogWeight other) {
  if (is_zero() || other.is_zero()) {
    value_ = kNegInf;
  } else {
    value_ += other.value_;
  }
  return *this;
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double const hi = std::max(a, b);
  double const lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) hi = std::max(hi, x);
  if (hi == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double x : xs) {
    if (x != kNegInf) sum += std::exp(x - hi);
  }
  return hi + std::log(sum);
}

double log_sub(double a, double b) {
  if (b > a) throw InvalidArgument("log_sub: result would be negative");
  if (b == kNegInf) return a;
  if (a == b) return kNegInf;
  return a + std::log1p(-std::exp(b - a));
}

std::string format_log(double x) {
  if (x == kNegInf) return "-inf";
  if (x == std::numeric_limits<double>::infinity()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace anneal
