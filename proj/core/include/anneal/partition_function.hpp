#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "anneal/beta.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

// Z(beta) = sum_{i=0..n} a_i e^{-i beta}, stored as ln a_i. a_0 >= 1 is
// enforced, so Z(inf) = a_0 >= 1 and every ratio below is well defined.
class PartitionFunction {
 public:
  explicit PartitionFunction(std::vector<double> log_coeffs);
  static PartitionFunction from_counts(std::span<const double> counts);

  std::size_t degree() const { return log_coeffs_.size() - 1; }
  std::span<const double> log_coeffs() const { return log_coeffs_; }
  double log_coeff(std::size_t i) const { return log_coeffs_.at(i); }

  // ln Z(beta); beta = inf gives ln a_0.
  double log_z(Beta beta) const;
  // ln Z(x) for any finite real x, including negative arguments needed by
  // the reverse Chebyshev condition.
  double log_z(double x) const;

  double log_A() const { return log_z(0.0); }
  double log_z_inf() const { return log_coeffs_[0]; }

  // f'(x) = -E[H] under mu_x.
  double f_prime(double x) const;

  // ln Pr(H in [lo, hi]) under mu_beta.
  double log_interval_mass(std::size_t lo, std::size_t hi, Beta beta) const;

  // Multiplies every coefficient by e^{log_c}. Throws if a_0 drops below 1.
  PartitionFunction scaled(double log_c) const;
  // Divides every coefficient by a_0 so that Z(inf) = 1.
  PartitionFunction normalized() const { return scaled(-log_coeffs_[0]); }

  // True when all mass sits at level 0.
  bool is_constant() const;

 private:
  std::vector<double> log_coeffs_;
};

// ln[Z(2b' - b) Z(b) / Z(b')^2] for b <= b'. For b' = inf this is
// ln[Z(b) / Z(inf)].
double log_chebyshev_ratio(const PartitionFunction& z, Beta from, Beta to);

// ln[Z(2b - b') Z(b') / Z(b)^2], the reverse-direction condition. Returns +inf
// when b' = inf and Z is not constant.
double log_reverse_ratio(const PartitionFunction& z, Beta from, Beta to);

}  // namespace anneal
