#pragma once

#include <cstddef>

#include "anneal/schedule.hpp"

namespace anneal {

// 0, 1/n, 2/n, ..., ceil(n ln A)/n, inf. When ln A <= ln 2 the single step
// (0, inf) already satisfies Z(0)/Z(inf) <= 2 and is returned instead.
CoolingSchedule uniform_schedule(std::size_t n, double log_A);

// 0, 1/n, ..., k/n, k g/n, k g^2/n, ..., k g^t/n, inf with k = ceil(ln A),
// g = 1 + 1/ln A, t = ceil((1 + ln A) ln n). Requires n >= 2, ln A >= 1.
CoolingSchedule bezakova_schedule(std::size_t n, double log_A);

struct LowerBoundReport {
  CoolingSchedule schedule;
  std::size_t length = 0;  // steps, including the final one into inf
  double bound = 0.0;      // ln(n/e) (ln(A-1)/ln(4B) - 1)
  bool satisfied = false;  // length >= bound
};

// Witness for the non-adaptive lower bound: from b_i take the largest
// k in {1..n} with (A-1) e^{-b_i k} > 4B and step by ln(4B)/k; stop once no
// such k exists. Throws AssumptionViolation unless A - 1 > 4B.
LowerBoundReport lower_bound_greedy(std::size_t n, double log_A, double B);

// Inserts b_i + 2^j/n, j = 0..t (t largest with 2^t/n <= b_{i+1} - b_i) into
// every finite step; the step into inf is left alone. Inserted points are
// tagged Augmented.
CoolingSchedule augment_reversible(const CoolingSchedule& s, std::size_t n);

}  // namespace anneal
