#include "anneal/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

ConvexCurve ConvexCurve::log_z(const PartitionFunction& z) {
  return {[z](double x) { return z.log_z(x); }, [z](double x) { return z.f_prime(x); }};
}

double PLApprox::interpolate(double x) const {
  if (breakpoints.empty()) throw InvalidArgument("PLApprox: empty");
  if (x <= breakpoints.front()) return values.front();
  if (x >= breakpoints.back()) return values.back();
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  auto const i = static_cast<std::size_t>(it - breakpoints.begin());
  double const t = (x - breakpoints[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
  return values[i - 1] + t * (values[i] - values[i - 1]);
}

double pl_piece_bound(const ConvexCurve& c, double gamma) {
  double const df = c.f(0.0) - c.f(gamma);
  double const ratio = c.f_prime(0.0) / c.f_prime(gamma);
  return 1.0 + std::sqrt(std::max(0.0, df * std::log(ratio)));
}

PLApprox pl_approx(const ConvexCurve& c, double gamma, double tol) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("pl_approx: gamma must be finite and >= 0");
  if (!(tol > 0.0)) throw InvalidArgument("pl_approx: tol must be > 0");
  PLApprox out;
  double g = 0.0;
  double fg = c.f(0.0);
  out.breakpoints.push_back(g);
  out.values.push_back(fg);
  if (gamma == 0.0) return out;

  while (g < gamma) {
    auto residual = [&](double y) { return c.f(0.5 * (g + y)) - 0.5 * (fg + c.f(y)) + 1.0; };
    // Coarse probe for monotonicity before trusting bisection.
    constexpr int kProbes = 16;
    double prev = residual(g);
    for (int p = 1; p <= kProbes; ++p) {
      double const r = residual(g + (gamma - g) * p / kProbes);
      if (r > prev + 1e-9) {
        throw NonConvexCurve("pl_approx: midpoint residual increases on [" + std::to_string(g) + ", " +
                             std::to_string(gamma) + "]; curve is not convex");
      }
      prev = r;
    }
    double next = gamma;
    if (residual(gamma) < 0.0) {
      double lo = g;
      double hi = gamma;
      while (hi - lo > tol) {
        double const mid = 0.5 * (lo + hi);
        (residual(mid) >= 0.0 ? lo : hi) = mid;
      }
      next = lo;
      if (!(next > g)) throw NonConvexCurve("pl_approx: no progress at " + std::to_string(g));
    }
    g = next;
    fg = c.f(g);
    out.breakpoints.push_back(g);
    out.values.push_back(fg);
  }
  return out;
}

double solve_decreasing(const std::function<double(double)>& f, double level, double tol) {
  if (!(f(0.0) > level)) throw InvalidArgument("solve_decreasing: f(0) must exceed the level");
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) > level) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw InvalidArgument("solve_decreasing: level is never reached");
  }
  while (hi - lo > tol * std::max(1.0, hi)) {
    double const mid = 0.5 * (lo + hi);
    (f(mid) > level ? lo : hi) = mid;
  }
  return hi;
}

void require_standard_assumptions(std::size_t n, double log_A) {
  double const ln_n = n > 0 ? std::log(static_cast<double>(n)) : -1.0;
  if (!(ln_n >= 1.0)) throw AssumptionViolation("assumption ln n >= 1 violated (n = " + std::to_string(n) + ")");
  if (!(log_A > 0.0) || !(std::log(log_A) >= 1.0)) {
    throw AssumptionViolation("assumption ln ln A >= 1 violated (ln A = " + std::to_string(log_A) + ")");
  }
  if (!(log_A >= std::log(ln_n))) throw AssumptionViolation("assumption A >= ln n violated");
}

double existence_length_bound(std::size_t n, double log_A) {
  return 4.0 * std::log(log_A) * std::sqrt(log_A * std::log(static_cast<double>(n)));
}

CoolingSchedule existence_schedule(const PartitionFunction& z) {
  if (z.is_constant()) return CoolingSchedule::uniform_tag({Beta(0.0), Beta::infinity()}, Move::Interval);
  PartitionFunction const zn = z.normalized();
  double const log_A = zn.log_A();
  require_standard_assumptions(zn.degree(), log_A);

  ConvexCurve const curve = ConvexCurve::log_z(zn);
  double const gamma = solve_decreasing(curve.f, 1.0);
  PLApprox const pl = pl_approx(curve, gamma);
  auto const t = static_cast<int>(std::ceil(std::log(log_A)));

  std::vector<Beta> betas;
  for (std::size_t i = 0; i + 1 < pl.breakpoints.size(); ++i) {
    double const g0 = pl.breakpoints[i];
    double const d = pl.breakpoints[i + 1] - g0;
    betas.emplace_back(g0);
    for (int r = 1; r <= t; ++r) {
      double const x = g0 + (1.0 - std::ldexp(1.0, -r)) * d;
      if (x > betas.back().value() && x < pl.breakpoints[i + 1]) betas.emplace_back(x);
    }
  }
  if (gamma > 0.0) betas.emplace_back(gamma);
  betas.push_back(Beta::infinity());
  return CoolingSchedule::uniform_tag(std::move(betas), Move::Interval);
}

CoolingSchedule greedy_schedule(const PartitionFunction& z, double B, double tol) {
  if (!(B > 1.0)) throw InvalidArgument("greedy_schedule: B must exceed 1");
  double const log_b = std::log(B);
  double const log_inf = z.log_z_inf();
  std::vector<Beta> betas = {Beta(0.0)};
  double b = 0.0;
  while (z.log_z(b) - log_inf > log_b) {
    auto ratio = [&](double y) { return log_chebyshev_ratio(z, Beta(b), Beta(y)); };
    double lo = b;
    double hi = b + 1.0;
    while (ratio(hi) <= log_b) {
      lo = hi;
      hi = b + 2.0 * (hi - b);
    }
    while (hi - lo > tol) {
      double const mid = 0.5 * (lo + hi);
      (ratio(mid) <= log_b ? lo : hi) = mid;
    }
    if (!(lo > b)) throw InvalidArgument("greedy_schedule: bisection made no progress");
    b = lo;
    betas.emplace_back(b);
  }
  betas.push_back(Beta::infinity());
  return CoolingSchedule::uniform_tag(std::move(betas), Move::Optimal);
}

PartitionFunction binomial_partition_function(std::size_t n) {
  std::vector<double> lc(n + 1);
  double const nd = static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    double const id = static_cast<double>(i);
    lc[i] = std::lgamma(nd + 1.0) - std::lgamma(id + 1.0) - std::lgamma(nd - id + 1.0);
  }
  lc[0] = 0.0;
  lc[n] = 0.0;
  return PartitionFunction(std::move(lc));
}

LbInequalityReport check_lb_inequality(std::size_t n, std::size_t grid) {
  if (n < 1 || grid < 2) throw InvalidArgument("check_lb_inequality: need n >= 1 and grid >= 2");
  double const nd = static_cast<double>(n);
  // n ln(1 + e^{-b}) without cancellation.
  auto f = [nd](double b) { return nd * std::log1p(std::exp(-b)); };
  LbInequalityReport r;
  r.min_slack = std::numeric_limits<double>::infinity();
  double const step = 1.0 / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    double const b = static_cast<double>(i) * step;
    for (std::size_t j = 0; j < grid; ++j) {
      double const x = static_cast<double>(j) * step;
      double const slack = f(b) + f(b + 2.0 * x) - 2.0 * f(b + x) - nd / 20.0 * x * x;
      if (slack < r.min_slack) {
        r.min_slack = slack;
        r.at_beta = b;
        r.at_x = x;
      }
      ++r.points;
    }
  }
  return r;
}

}  // namespace anneal
