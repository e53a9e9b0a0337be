#include "anneal/nonadaptive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

namespace {

std::vector<Beta> dedup_finite(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Beta> out;
  out.reserve(xs.size() + 1);
  for (double x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

CoolingSchedule uniform_schedule(std::size_t n, double log_A) {
  if (n < 1 || !(log_A > 0.0)) throw InvalidArgument("uniform_schedule: need n >= 1 and ln A > 0");
  if (log_A <= std::numbers::ln2) {
    return CoolingSchedule::uniform_tag({Beta(0.0), Beta::infinity()}, Move::NonAdaptive);
  }
  auto const nd = static_cast<double>(n);
  auto const last = static_cast<std::size_t>(std::ceil(nd * log_A));
  std::vector<Beta> betas;
  betas.reserve(last + 2);
  for (std::size_t i = 0; i <= last; ++i) betas.emplace_back(static_cast<double>(i) / nd);
  betas.push_back(Beta::infinity());
  return CoolingSchedule::uniform_tag(std::move(betas), Move::NonAdaptive);
}

CoolingSchedule bezakova_schedule(std::size_t n, double log_A) {
  if (n < 2 || !(log_A >= 1.0)) throw InvalidArgument("bezakova_schedule: need n >= 2 and ln A >= 1");
  auto const nd = static_cast<double>(n);
  auto const k = static_cast<std::size_t>(std::ceil(log_A));
  double const g = 1.0 + 1.0 / log_A;
  auto const t = static_cast<std::size_t>(std::ceil((1.0 + log_A) * std::log(nd)));
  std::vector<double> xs;
  for (std::size_t i = 0; i <= k; ++i) xs.push_back(static_cast<double>(i) / nd);
  double const base = static_cast<double>(k) / nd;
  for (std::size_t j = 1; j <= t; ++j) xs.push_back(base * std::pow(g, static_cast<double>(j)));
  auto betas = dedup_finite(std::move(xs));
  betas.push_back(Beta::infinity());
  return CoolingSchedule::uniform_tag(std::move(betas), Move::NonAdaptive);
}

LowerBoundReport lower_bound_greedy(std::size_t n, double log_A, double B) {
  if (n < 1 || !(B > 0.0)) throw InvalidArgument("lower_bound_greedy: need n >= 1 and B > 0");
  double const log_4b = std::log(4.0 * B);
  double const log_am1 = log_A > 0.0 ? log_sub(log_A, 0.0) : kNegInf;
  if (!(log_am1 > log_4b)) {
    throw AssumptionViolation("lower_bound_greedy: needs A - 1 > 4B (ln(A-1) = " + format_log(log_am1) +
                              ", ln(4B) = " + format_log(log_4b) + ")");
  }
  // (A-1) e^{-b k} > 4B  <=>  k < gap / b.
  double const gap = log_am1 - log_4b;
  std::vector<Beta> betas = {Beta(0.0)};
  double b = 0.0;
  for (;;) {
    std::size_t k = n;
    if (b > 0.0) {
      double const x = gap / b;
      if (x <= 1.0) break;
      double fl = std::floor(x);
      if (fl == x) fl -= 1.0;
      k = std::min<std::size_t>(n, static_cast<std::size_t>(fl));
    }
    b += log_4b / static_cast<double>(k);
    betas.emplace_back(b);
  }
  betas.push_back(Beta::infinity());

  LowerBoundReport r{CoolingSchedule::uniform_tag(std::move(betas), Move::NonAdaptive)};
  r.length = r.schedule.length();
  r.bound = std::log(static_cast<double>(n) / std::numbers::e) * (log_am1 / log_4b - 1.0);
  r.satisfied = static_cast<double>(r.length) >= r.bound;
  return r;
}

CoolingSchedule augment_reversible(const CoolingSchedule& s, std::size_t n) {
  if (n < 1) throw InvalidArgument("augment_reversible: need n >= 1");
  auto const nd = static_cast<double>(n);
  const auto& b = s.betas();
  std::vector<Beta> betas;
  std::vector<bool> original;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    betas.push_back(b[i]);
    original.push_back(true);
    if (b[i + 1].is_infinite()) continue;
    double const lo = b[i].value();
    double const hi = b[i + 1].value();
    double last = lo;
    for (double step = 1.0 / nd; lo + step <= hi; step *= 2.0) {
      double const x = lo + step;
      if (x > last && x < hi) {
        betas.emplace_back(x);
        original.push_back(false);
        last = x;
      }
    }
  }
  betas.push_back(b.back());
  original.push_back(true);

  // An original step keeps its tag only when nothing was inserted into it.
  std::vector<Move> moves;
  std::size_t orig_step = 0;
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    if (original[i] && original[i + 1]) {
      moves.push_back(s.moves()[orig_step]);
    } else {
      moves.push_back(betas[i + 1].is_infinite() ? Move::Final : Move::Augmented);
    }
    if (original[i + 1]) ++orig_step;
  }
  return CoolingSchedule(std::move(betas), std::move(moves));
}

}  // namespace anneal
