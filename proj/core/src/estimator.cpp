#include "anneal/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

namespace {

std::uint64_t ceil_count(double x) {
  // Products like 512/0.04 land a hair above the integer.
  return static_cast<std::uint64_t>(std::ceil(x * (1.0 - 1e-12)));
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidArgument("eps must lie in (0, 1]");
}

}  // namespace

RatioEstimate sample_ratio(Beta b, Beta b_next, HamiltonianSampler& sampler, std::uint64_t count, Rng& rng,
                           unsigned workers) {
  if (count < 1) throw InvalidArgument("sample_ratio: count must be >= 1");
  if (b.is_infinite() || b_next < b) throw InvalidArgument("sample_ratio: need finite b <= b'");
  auto xs = sampler.sample_batch(b, count, rng, workers);
  double sum = 0.0;
  if (b_next.is_infinite()) {
    sum = static_cast<double>(std::count(xs.begin(), xs.end(), 0));
  } else {
    double const d = b.value() - b_next.value();
    // Few distinct levels, so tabulate e^{dH} once per level.
    std::vector<double> w(sampler.degree() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(d * static_cast<double>(i));
    for (int x : xs) sum += w[static_cast<std::size_t>(x)];
  }
  return {b, b_next, sum / static_cast<double>(count), count};
}

std::uint64_t samples_per_ratio(double B, std::size_t steps, double eps) {
  check_eps(eps);
  if (!(B >= 1.0) || steps < 1) throw InvalidArgument("samples_per_ratio: need B >= 1 and l >= 1");
  return ceil_count(16.0 * B * static_cast<double>(steps) / (eps * eps));
}

CountEstimate product_estimate(std::span<const Beta> betas, HamiltonianSampler& sampler, double log_z_start,
                               double B, double eps, Rng& rng, std::optional<std::uint64_t> per_ratio_cap,
                               unsigned workers) {
  if (betas.size() < 2) throw InvalidArgument("product_estimate: need at least one step");
  std::size_t const steps = betas.size() - 1;
  std::uint64_t m = samples_per_ratio(B, steps, eps);
  CountEstimate out;
  out.eps = eps;
  if (per_ratio_cap && *per_ratio_cap < m) {
    m = std::max<std::uint64_t>(1, *per_ratio_cap);
    out.note = "per-ratio samples capped below 16Bl/eps^2; the 3/4 guarantee is empirical only";
  }
  double acc = log_z_start;
  for (std::size_t i = 0; i < steps; ++i) {
    // Independent stream per ratio, so ratios do not depend on each other's counts.
    Rng r = make_rng(rng(), i);
    out.per_ratio.push_back(sample_ratio(betas[i], betas[i + 1], sampler, m, r, workers));
    out.samples += m;
    double const s = out.per_ratio.back().mean;
    if (s == 0.0) {
      out.zero = true;
      out.note = "ratio " + std::to_string(i) + " (" + to_string(betas[i]) + " -> " + to_string(betas[i + 1]) +
                 ") had no nonzero sample";
    } else {
      acc += std::log(s);
    }
  }
  out.log_estimate = out.zero ? kNegInf : acc;
  return out;
}

WarmCount warm_sample_count(std::size_t steps, double eps) {
  check_eps(eps);
  if (steps < 1) throw InvalidArgument("warm_sample_count: l must be >= 1");
  WarmCount w;
  auto const l = static_cast<double>(steps);
  w.K = ceil_count(512.0 * l / (eps * eps));
  w.kappa = std::ldexp(eps * eps, -20) / (std::pow(static_cast<double>(w.K), 5) * l);
  return w;
}

double median_confidence(std::size_t m, double p) {
  // Sum of Binomial(m, p) mass above m/2, term by term in log space.
  double acc = kNegInf;
  double const lm = std::lgamma(static_cast<double>(m) + 1.0);
  for (std::size_t k = m / 2 + 1; k <= m; ++k) {
    auto const kd = static_cast<double>(k);
    double const lt = lm - std::lgamma(kd + 1.0) - std::lgamma(static_cast<double>(m - k) + 1.0) +
                      kd * std::log(p) + static_cast<double>(m - k) * std::log1p(-p);
    acc = log_add(acc, lt);
  }
  return std::exp(acc);
}

CountEstimate amplify(std::span<const CountEstimate> estimates) {
  if (estimates.empty()) throw InvalidArgument("amplify: need at least one estimate");
  if (estimates.size() == 1) return estimates.front();
  std::vector<double> logs;
  for (const auto& e : estimates) logs.push_back(e.log_estimate);
  std::sort(logs.begin(), logs.end());
  std::size_t const m = logs.size();
  CountEstimate out;
  out.eps = estimates.front().eps;
  out.log_estimate = m % 2 ? logs[m / 2] : 0.5 * (logs[m / 2 - 1] + logs[m / 2]);
  if (m % 2 == 0 && (logs[m / 2 - 1] == kNegInf)) out.log_estimate = kNegInf;
  out.zero = out.log_estimate == kNegInf;
  out.confidence = median_confidence(m);
  for (const auto& e : estimates) out.samples += e.samples;
  out.note = "median of " + std::to_string(m) + " runs";
  return out;
}

double certified_B(const PartitionFunction& z, std::span<const Beta> betas) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    worst = std::max(worst, log_chebyshev_ratio(z, betas[i], betas[i + 1]));
  }
  return std::exp(worst);
}

EndToEndResult end_to_end(const GibbsSystem& sys, HamiltonianSampler& sampler, const EstimatorConfig& cfg,
                          std::uint64_t seed, const PartitionFunction* exact) {
  check_eps(cfg.eps);
  bool const zero_anchor = sys.anchor() == CountAnchor::Zero;
  if (cfg.target && zero_anchor) throw InvalidArgument("end_to_end: target beta needs a system anchored at 0");

  EndToEndResult res;
  res.schedule = print_cooling_schedule(sys.degree(), sys.log_A(), sampler, cfg.adaptive, split_seed(seed, 1));
  if (!res.schedule.schedule) {
    res.estimate.note = "schedule construction failed";
    return res;
  }
  std::vector<Beta> betas = cfg.target && cfg.target->is_finite() ? res.schedule.schedule->truncated_at(*cfg.target)
                                                                 : res.schedule.schedule->betas();
  if (cfg.B) {
    res.B_used = *cfg.B;
  } else if (exact) {
    res.B_used = std::max(1.0, certified_B(*exact, betas));
  } else {
    res.B_used = cfg.adaptive.B;
  }

  Rng rng = make_rng(seed, 2);
  if (zero_anchor) {
    // prod S_i estimates Z(inf)/Z(0); the known end is Z(inf).
    res.estimate = product_estimate(betas, sampler, 0.0, res.B_used, cfg.eps, rng, cfg.per_ratio_cap,
                                    cfg.adaptive.workers);
    if (!res.estimate.zero) res.estimate.log_estimate = sys.log_known_end() - res.estimate.log_estimate;
  } else {
    res.estimate = product_estimate(betas, sampler, sys.log_known_end(), res.B_used, cfg.eps, rng,
                                    cfg.per_ratio_cap, cfg.adaptive.workers);
  }
  res.ok = !res.estimate.zero;
  return res;
}

}  // namespace anneal
