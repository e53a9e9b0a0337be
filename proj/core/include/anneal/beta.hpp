#pragma once

#include <compare>
#include <limits>
#include <string>

namespace anneal {

// Inverse temperature in [0, inf]. Infinity is a distinguished state rather
// than a floating-point sentinel, so arithmetic on it is always explicit.
class Beta {
 public:
  constexpr Beta() = default;
  explicit Beta(double value);

  static constexpr Beta infinity() {
    Beta b;
    b.infinite_ = true;
    return b;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Finite value; throws on infinity.
  double value() const;

  // +inf for the infinite state. Only for printing and ordering.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend bool operator==(Beta a, Beta b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(Beta a, Beta b) {
    return a.as_double() <=> b.as_double();
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

std::string to_string(Beta b);

}  // namespace anneal
