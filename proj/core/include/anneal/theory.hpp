#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "anneal/partition_function.hpp"
#include "anneal/schedule.hpp"

namespace anneal {

// Decreasing convex f with increasing derivative, e.g. f = ln Z.
struct ConvexCurve {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;

  static ConvexCurve log_z(const PartitionFunction& z);
};

struct PLApprox {
  std::vector<double> breakpoints;  // 0 = g_0 < g_1 < ... < g_j = gamma
  std::vector<double> values;       // f at each breakpoint

  std::size_t pieces() const { return breakpoints.empty() ? 0 : breakpoints.size() - 1; }
  // Piecewise-linear interpolant g(x) through the breakpoints.
  double interpolate(double x) const;
};

// 1 + sqrt((f(0) - f(gamma)) ln(f'(0) / f'(gamma))).
double pl_piece_bound(const ConvexCurve& c, double gamma);

// Greedy breakpoints: g_{i+1} is the largest y in [g_i, gamma] with
//   f((g_i + y)/2) >= (f(g_i) + f(y))/2 - 1,
// located by bisection to `tol`. Throws NonConvexCurve when the midpoint
// residual is seen increasing along a segment.
PLApprox pl_approx(const ConvexCurve& c, double gamma, double tol = 1e-10);

// Root of f(x) = level for decreasing f with f(0) > level, by bisection.
double solve_decreasing(const std::function<double(double)>& f, double level, double tol = 1e-10);

// Checks ln n >= 1, ln ln A >= 1 and A >= ln n; throws AssumptionViolation
// naming the first one that fails.
void require_standard_assumptions(std::size_t n, double log_A);

// Constructive e^2-Chebyshev schedule: normalise a_0 = 1, cut [0, gamma]
// (f(gamma) = 1) into pl_approx pieces and refine every piece geometrically
// with ceil(ln ln A) points, then step to inf.
CoolingSchedule existence_schedule(const PartitionFunction& z);
double existence_length_bound(std::size_t n, double log_A);

// Length-optimal B-schedule: from b_i take the largest b_{i+1} with Chebyshev
// ratio <= B, and finish with inf once Z(b)/Z(inf) <= B.
CoolingSchedule greedy_schedule(const PartitionFunction& z, double B, double tol = 1e-10);

// ln Z for Z(b) = (1 + e^{-b})^n, from binomial coefficients.
PartitionFunction binomial_partition_function(std::size_t n);

struct LbInequalityReport {
  double min_slack = 0.0;
  double at_beta = 0.0;
  double at_x = 0.0;
  std::size_t points = 0;
};

// Minimum over a grid x grid sweep of (b, x) in [0, 1]^2 of
//   f(b) + f(b + 2x) - 2 f(b + x) - (n/20) x^2,  f(b) = n ln(1 + e^{-b}).
LbInequalityReport check_lb_inequality(std::size_t n, std::size_t grid = 101);

}  // namespace anneal
