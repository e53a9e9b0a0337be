#include "anneal/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>

#include "anneal/bsearch.hpp"
#include "anneal/log_weight.hpp"
#include "anneal/theory.hpp"

namespace anneal {

IntervalPartition::IntervalPartition(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty() || intervals_.front() != Interval{0, 0}) {
    throw InvalidArgument("IntervalPartition: must start with [0, 0]");
  }
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].first != intervals_[i - 1].second + 1 || intervals_[i].second < intervals_[i].first) {
      throw InvalidArgument("IntervalPartition: intervals must be contiguous and disjoint");
    }
  }
}

std::size_t IntervalPartition::locate(std::size_t level) const {
  if (level > intervals_.back().second) throw InvalidArgument("IntervalPartition: level out of range");
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), level,
                             [](std::size_t v, const Interval& I) { return v < I.first; });
  return static_cast<std::size_t>(it - intervals_.begin()) - 1;
}

IntervalPartition build_partition(std::size_t n, double log_A) {
  if (!(log_A > 0.0)) throw InvalidArgument("build_partition: ln A must be > 0");
  double const root = std::sqrt(log_A);
  std::vector<IntervalPartition::Interval> out = {{0, 0}};
  for (std::size_t b = 1; b <= n;) {
    auto const w = static_cast<std::size_t>(std::floor(static_cast<double>(b) / root));
    std::size_t const c = std::min(b + w, n);
    out.emplace_back(b, c);
    b = c + 1;
  }
  return IntervalPartition(std::move(out));
}

double partition_size_bound(std::size_t n, double log_A) {
  return 4.0 * std::sqrt(log_A) * std::log(static_cast<double>(n));
}

AdaptiveConstants derive_constants(const AdaptiveConfig& cfg, std::size_t n, double log_A,
                                   std::size_t partition_size) {
  if (!(cfg.delta_prime > 0.0 && cfg.delta_prime < 1.0)) {
    throw InvalidArgument("AdaptiveConfig: delta' must lie in (0, 1)");
  }
  bool const desk = cfg.mode == AdaptiveMode::Desk;
  double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  double ln_a = log_A;
  double lnln_a = log_A > 0.0 ? std::log(log_A) : 0.0;
  if (desk) {
    ln_n = std::max(ln_n, 1.0);
    ln_a = std::max(ln_a, 1.0);
    lnln_a = std::max(lnln_a, 1.0);
  }
  AdaptiveConstants k;
  k.h = 1.0 / (8.0 * static_cast<double>(partition_size));
  k.delta = cfg.delta_prime / (1600.0 * ln_n * ln_n * ln_a * ln_a);
  if (desk) {
    k.s = cfg.desk_s_override.value_or(2000);
  } else {
    k.s = static_cast<std::uint64_t>(std::ceil(8.0 / k.h * std::log(1.0 / k.delta)));
  }
  if (k.s < 1) throw InvalidArgument("AdaptiveConfig: s must be >= 1");
  k.refine = std::max(1, static_cast<int>(std::ceil(lnln_a)));
  return k;
}

double q_budget(std::size_t n, double log_A, double delta_prime) {
  double const t = std::log(static_cast<double>(n)) + std::log(log_A);
  return std::ceil(1e7 * log_A * std::pow(t, 5) * std::log(1.0 / delta_prime));
}

void RunTranscript::record(OracleCall c) {
  total_samples += c.samples;
  calls.push_back(std::move(c));
}

void RunTranscript::write_jsonl(std::ostream& os) const {
  for (const auto& c : calls) {
    nlohmann::json j = {{"op", c.op}, {"beta", c.beta}, {"samples", c.samples}};
    if (c.beta2) j["beta2"] = *c.beta2;
    os << j.dump() << '\n';
  }
  for (const auto& f : failures) {
    os << nlohmann::json{{"op", "failure"}, {"kind", f.kind}, {"beta", f.beta}, {"detail", f.detail}}.dump()
       << '\n';
  }
  nlohmann::json summary = {{"op", "summary"},
                            {"seed", seed},
                            {"Q", total_samples},
                            {"optimal", moves.optimal},
                            {"long", moves.long_moves},
                            {"interval", moves.interval},
                            {"interval_emissions", moves.interval_emissions},
                            {"starved_predicates", starved_predicates}};
  os << summary.dump() << '\n';
}

namespace {

std::uint64_t count_in(const IntervalPartition::Interval& I, const std::vector<int>& xs) {
  return static_cast<std::uint64_t>(std::count_if(xs.begin(), xs.end(), [&](int x) {
    return static_cast<std::size_t>(x) >= I.first && static_cast<std::size_t>(x) <= I.second;
  }));
}

}  // namespace

bool is_heavy(const IntervalPartition::Interval& I, Beta beta, HamiltonianSampler& sampler, double h,
              std::uint64_t s, Rng& rng, RunTranscript* tr, unsigned workers) {
  auto xs = sampler.sample_batch(beta, s, rng, workers);
  if (tr) tr->record({"is_heavy", beta.as_double(), std::nullopt, s});
  return static_cast<double>(count_in(I, xs)) >= 2.0 * h * static_cast<double>(s);
}

std::size_t find_heavy(Beta beta, const std::vector<bool>& bad, HamiltonianSampler& sampler,
                       const IntervalPartition& P, double h, std::uint64_t s, Rng& rng, RunTranscript* tr,
                       unsigned workers) {
  if (bad.size() != P.size()) throw InvalidArgument("find_heavy: Bad mask does not match the partition");
  auto xs = sampler.sample_batch(beta, s, rng, workers);
  if (tr) tr->record({"find_heavy", beta.as_double(), std::nullopt, s});
  std::vector<std::uint64_t> hist(P.size(), 0);
  for (int x : xs) hist[P.locate(static_cast<std::size_t>(x))] += 1;
  std::size_t best = P.size();
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (bad[i]) continue;
    if (best == P.size() || hist[i] > hist[best]) best = i;
  }
  if (best == P.size() || static_cast<double>(hist[best]) < 2.0 * h * static_cast<double>(s)) {
    throw HeavyNotFound("find_heavy: no interval outside Bad reached 2hs draws at beta = " +
                        to_string(beta));
  }
  return best;
}

double log_est_ratio(const IntervalPartition::Interval& I, Beta b1, Beta b2, HamiltonianSampler& sampler,
                     std::uint64_t s, Rng& rng, RunTranscript* tr, unsigned workers) {
  auto x1 = sampler.sample_batch(b1, s, rng, workers);
  auto x2 = sampler.sample_batch(b2, s, rng, workers);
  if (tr) tr->record({"est_ratio", b1.as_double(), b2.as_double(), 2 * s});
  auto const u1 = count_in(I, x1);
  auto const u2 = count_in(I, x2);
  if (u2 == 0) throw SampleStarvation("est_ratio: no draws at beta = " + to_string(b2) + " landed in I");
  if (u1 == 0) return kNegInf;
  return std::log(static_cast<double>(u1)) - std::log(static_cast<double>(u2)) +
         static_cast<double>(I.first) * (b1.value() - b2.value());
}

AdaptiveResult print_cooling_schedule(std::size_t n, double log_A, HamiltonianSampler& sampler,
                                      const AdaptiveConfig& cfg, std::uint64_t seed) {
  if (!(log_A >= 0.0)) throw InvalidArgument("print_cooling_schedule: ln A must be >= 0");
  if (n == 0 || log_A == 0.0) {
    // Constant Z: all mass at level 0, nothing to sample.
    AdaptiveResult res;
    res.transcript.seed = seed;
    res.schedule = CoolingSchedule({Beta(0.0), Beta::infinity()}, {Move::Final});
    return res;
  }
  if (cfg.mode == AdaptiveMode::Faithful) require_standard_assumptions(n, log_A);

  AdaptiveResult res;
  res.partition = build_partition(n, log_A);
  res.constants = derive_constants(cfg, n, log_A, res.partition.size());
  res.transcript.seed = seed;
  const auto& P = res.partition;
  const auto& k = res.constants;
  RunTranscript& tr = res.transcript;
  Rng rng = make_rng(seed, 0);
  double const nd = static_cast<double>(n);
  double const log_threshold = std::log(cfg.est_threshold);

  std::vector<bool> bad(P.size(), false);
  std::vector<Beta> betas = {Beta(0.0)};
  std::vector<Move> moves;
  auto emit = [&](double x, Move m) {
    if (x <= betas.back().value()) return false;
    betas.emplace_back(x);
    moves.push_back(m);
    return true;
  };
  auto fail = [&](std::string kind, double beta, std::string detail) {
    tr.failures.push_back({std::move(kind), beta, std::move(detail)});
    return res;
  };

  double b0 = 0.0;
  while (b0 < log_A) {
    std::size_t idx = 0;
    try {
      idx = find_heavy(Beta(b0), bad, sampler, P, k.h, k.s, rng, &tr, cfg.workers);
    } catch (const HeavyNotFound& e) {
      return fail("HeavyNotFound", b0, e.what());
    }
    const auto I = P[idx];
    auto const w = static_cast<double>(I.second - I.first);
    double const L = w == 0.0 ? log_A : std::min(b0 + 1.0 / w, log_A);

    double const b_star = monotone_bsearch(
        b0, L, [&](double x) { return is_heavy(I, Beta(x), sampler, k.h, k.s, rng, &tr, cfg.workers); },
        1.0 / (2.0 * nd));
    double const mid = 0.5 * (b0 + b_star);

    // EST(I, x, b0) EST(I, x, 2x - b0) estimates Z(b0) Z(2x - b0) / Z(x)^2.
    auto pred = [&](double x) {
      try {
        double const r = log_est_ratio(I, Beta(x), Beta(b0), sampler, k.s, rng, &tr, cfg.workers) +
                         log_est_ratio(I, Beta(x), Beta(2.0 * x - b0), sampler, k.s, rng, &tr, cfg.workers);
        return r <= log_threshold;
      } catch (const SampleStarvation&) {
        ++tr.starved_predicates;
        return false;
      }
    };
    double const b = monotone_bsearch(b0, mid, pred, 1.0 / (4.0 * nd));

    if (b < mid) {
      if (!(b > b0)) return fail("Stall", b0, "optimal move made no progress");
      emit(b, Move::Optimal);
      ++tr.moves.optimal;
      b0 = b;
    } else if (b_star == L) {
      emit(mid, Move::Long);
      emit(b_star, Move::Long);
      ++tr.moves.long_moves;
      b0 = b_star;
    } else {
      double const gamma = b_star - b0;
      for (int r = 1; r <= k.refine; ++r) {
        tr.moves.interval_emissions += emit(b0 + (1.0 - std::ldexp(1.0, -r)) * gamma, Move::Interval);
      }
      tr.moves.interval_emissions += emit(b_star, Move::Interval);
      ++tr.moves.interval;
      bad[idx] = true;
      b0 = b_star;
    }
  }
  betas.push_back(Beta::infinity());
  moves.push_back(Move::Final);
  res.schedule = CoolingSchedule(std::move(betas), std::move(moves));
  return res;
}

}  // namespace anneal
