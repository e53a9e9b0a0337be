#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "anneal/adaptive.hpp"
#include "anneal/bsearch.hpp"
#include "anneal/errors.hpp"
#include "anneal/samplers.hpp"
#include "oracle_values.hpp"
#include "random_instances.hpp"

using namespace anneal;
using Interval = IntervalPartition::Interval;

TEST(Partition, HandTracedCase) {
  auto p = build_partition(10, 1.0);
  std::vector<Interval> want = {{0, 0}, {1, 2}, {3, 6}, {7, 10}};
  EXPECT_EQ(p.intervals(), want);
  EXPECT_EQ(build_partition(0, 1.0).intervals(), (std::vector<Interval>{{0, 0}}));
  EXPECT_EQ(p.locate(5), 2u);
  EXPECT_EQ(p.locate(10), 3u);
}

TEST(Partition, RejectsGapsAndOverlaps) {
  EXPECT_THROW(IntervalPartition({{0, 0}, {2, 3}}), InvalidArgument);
  EXPECT_THROW(IntervalPartition({{0, 1}, {1, 3}}), InvalidArgument);
  EXPECT_THROW(IntervalPartition({}), InvalidArgument);
}

TEST(Partition, WidthRuleAndSizeBound) {
  auto rng = make_rng(12, 0);
  for (int t = 0; t < 500; ++t) {
    std::size_t const n = 3 + rng() % 100000;
    double const la = std::exp(1.0) + uniform01(rng) * 500.0;
    if (std::log(static_cast<double>(n)) < 1.0 || std::log(la) < 1.0 || la < std::log(static_cast<double>(n))) {
      continue;
    }
    auto p = build_partition(n, la);
    EXPECT_LE(static_cast<double>(p.size()), partition_size_bound(n, la));
    EXPECT_EQ(p[0], (Interval{0, 0}));
    EXPECT_EQ(p.intervals().back().second, n);
    for (std::size_t i = 1; i < p.size(); ++i) {
      auto [b, c] = p[i];
      EXPECT_EQ(b, p[i - 1].second + 1);
      auto const w = static_cast<std::size_t>(std::floor(static_cast<double>(b) / std::sqrt(la)));
      EXPECT_EQ(c, std::min(b + w, n));
    }
  }
}

TEST(Bsearch, Semantics) {
  EXPECT_EQ(monotone_bsearch(0.0, 1.0, [](double) { return true; }, 1e-6), 1.0);
  double const x = monotone_bsearch(0.0, 1.0, [](double v) { return v <= 0.37; }, 1e-6);
  EXPECT_GE(x, 0.37 - 1e-6);
  EXPECT_LE(x, 0.37);
  EXPECT_THROW(monotone_bsearch(0.0, 1.0, [](double) { return false; }, 1e-6, true), InvalidArgument);
  EXPECT_THROW(monotone_bsearch(0.0, 1.0, [](double) { return true; }, 0.0), InvalidArgument);
}

TEST(Heavy, FullIntervalAndEmptyInterval) {
  ExactSampler s(PartitionFunction::from_counts(std::vector<double>{1, 0, 0, 4, 4}));
  auto rng = make_rng(1, 0);
  for (int t = 0; t < 20; ++t) {
    EXPECT_TRUE(is_heavy({0, 4}, Beta(0.5), s, 0.125, 200, rng));
    EXPECT_FALSE(is_heavy({1, 2}, Beta(0.5), s, 0.125, 200, rng));
  }
}

TEST(Heavy, FindHeavyPicksTheDominantInterval) {
  IntervalPartition P({{0, 0}, {1, 2}, {3, 6}, {7, 10}});
  // 90% of the mass at beta = 0 sits in [3, 6].
  std::vector<double> c(11, 0.0);
  c[0] = 1;
  c[1] = 1.0 / 3;
  c[8] = 2.0 / 3;
  c[4] = 18;
  ExactSampler s(PartitionFunction::from_counts(c));
  auto rng = make_rng(4, 4);
  std::vector<bool> bad(P.size(), false);
  int hits = 0;
  for (int t = 0; t < 1000; ++t) hits += find_heavy(Beta(0.0), bad, s, P, 0.05, 200, rng) == 2;
  EXPECT_GE(hits, 999);

  ExactSampler constant(PartitionFunction({0.0}));
  IntervalPartition one({{0, 0}});
  EXPECT_EQ(find_heavy(Beta(0.0), {false}, constant, one, 0.05, 100, rng), 0u);
  std::vector<bool> all_bad(P.size(), true);
  EXPECT_THROW(find_heavy(Beta(0.0), all_bad, s, P, 0.05, 100, rng), HeavyNotFound);
}

TEST(EstRatio, SameBetaIsNearOne) {
  ExactSampler s(PartitionFunction::from_counts(std::vector<double>{1, 3, 3, 1}));
  auto rng = make_rng(5, 0);
  EXPECT_NEAR(log_est_ratio({0, 3}, Beta(0.7), Beta(0.7), s, 20000, rng), 0.0, 0.05);
}

TEST(EstRatio, TracksTheExactRatio) {
  auto z = PartitionFunction::from_counts(std::vector<double>{1, 3, 3, 1});
  ExactSampler s(z);
  auto rng = make_rng(6, 0);
  double const est = log_est_ratio({1, 1}, Beta(0.2), Beta(0.9), s, 200000, rng);
  EXPECT_NEAR(est, z.log_z(Beta(0.9)) - z.log_z(Beta(0.2)), 0.03);
}

TEST(EstRatio, StarvationThrows) {
  ExactSampler s(PartitionFunction::from_counts(std::vector<double>{1, 0, 1}));
  auto rng = make_rng(6, 1);
  EXPECT_THROW(log_est_ratio({1, 1}, Beta(0.0), Beta(1.0), s, 100, rng), SampleStarvation);
}

TEST(Budget, MatchesFormulaAndScales) {
  EXPECT_NEAR(q_budget(100, 20.0, 0.1), oracle::kQBudget_100_20_01, 1.0);
  EXPECT_LT(q_budget(100, 20.0, 0.1), q_budget(200, 20.0, 0.1));
  EXPECT_LT(q_budget(100, 20.0, 0.1), q_budget(100, 30.0, 0.1));
  EXPECT_LT(q_budget(100, 20.0, 0.1), q_budget(100, 20.0, 0.01));
  EXPECT_NEAR(q_budget(100, 20.0, 0.01) / q_budget(100, 20.0, 0.1), 2.0, 1e-9);
}

TEST(Constants, DeskDefaults) {
  AdaptiveConfig cfg;
  auto c = derive_constants(cfg, 10, 2.0, 4);
  EXPECT_EQ(c.s, 2000u);
  EXPECT_GE(c.refine, 1);
  EXPECT_GT(c.h, 0.0);
  EXPECT_LE(c.h, 0.125);
  cfg.desk_s_override = 500;
  EXPECT_EQ(derive_constants(cfg, 10, 2.0, 4).s, 500u);
  cfg.mode = AdaptiveMode::Faithful;
  ExactSampler s(PartitionFunction::from_counts(std::vector<double>{1, 2, 1}));
  EXPECT_THROW(print_cooling_schedule(2, std::log(4.0), s, cfg, 0), AssumptionViolation);
}

TEST(Schedule, ConstantZGivesOneStep) {
  ExactSampler s(PartitionFunction({0.0}));
  auto r = print_cooling_schedule(0, 0.0, s, AdaptiveConfig{}, 1);
  ASSERT_TRUE(r.schedule);
  EXPECT_EQ(r.schedule->length(), 1u);
  // Degree 3 but every level above 0 is empty.
  auto r3 = print_cooling_schedule(3, 0.0, s, AdaptiveConfig{}, 1);
  ASSERT_TRUE(r3.schedule);
  EXPECT_EQ(r3.schedule->length(), 1u);
}

TEST(Schedule, RandomZVerifiesAndIsSeedDeterministic) {
  auto rng = make_rng(99, 0);
  int passed = 0;
  for (int t = 0; t < 15; ++t) {
    auto z = anneal::testing::random_explicit_z(rng, 3, 50, 3.0, 30.0);
    ExactSampler s1(z), s2(z);
    auto a = print_cooling_schedule(z.degree(), z.log_A(), s1, AdaptiveConfig{}, 1000 + t);
    auto b = print_cooling_schedule(z.degree(), z.log_A(), s2, AdaptiveConfig{}, 1000 + t);
    ASSERT_TRUE(a.schedule && b.schedule);
    EXPECT_EQ(*a.schedule, *b.schedule);
    EXPECT_EQ(a.transcript.total_samples, b.transcript.total_samples);
    EXPECT_EQ(a.transcript.calls.size(), b.transcript.calls.size());
    passed += verify_schedule(z, *a.schedule, 3e6).passed;
    // Every interval move emits at most refine + 1 points.
    EXPECT_LE(a.transcript.moves.interval_emissions,
              a.transcript.moves.interval * static_cast<std::size_t>(a.constants.refine + 1));
  }
  EXPECT_GE(passed, 14);
}

TEST(Schedule, WorkerCountDoesNotChangeTheRun) {
  auto rng = make_rng(3, 3);
  auto z = anneal::testing::random_explicit_z(rng, 40, 20.0);
  ExactSampler s1(z), s4(z);
  AdaptiveConfig c1, c4;
  c4.workers = 4;
  auto a = print_cooling_schedule(z.degree(), z.log_A(), s1, c1, 5);
  auto b = print_cooling_schedule(z.degree(), z.log_A(), s4, c4, 5);
  ASSERT_TRUE(a.schedule && b.schedule);
  EXPECT_EQ(*a.schedule, *b.schedule);
}

TEST(Transcript, OneJsonLinePerRecordPlusSummary) {
  auto rng = make_rng(8, 0);
  auto z = anneal::testing::random_explicit_z(rng, 20, 8.0);
  ExactSampler s(z);
  auto r = print_cooling_schedule(z.degree(), z.log_A(), s, AdaptiveConfig{}, 2);
  std::ostringstream os;
  r.transcript.write_jsonl(os);
  std::size_t lines = 0;
  for (char ch : os.str()) lines += ch == '\n';
  EXPECT_EQ(lines, r.transcript.calls.size() + r.transcript.failures.size() + 1);
  std::uint64_t total = 0;
  for (auto& c : r.transcript.calls) total += c.samples;
  EXPECT_EQ(total, r.transcript.total_samples);
}
