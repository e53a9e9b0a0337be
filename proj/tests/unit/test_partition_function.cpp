#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"
#include "anneal/partition_function.hpp"
#include "anneal/schedule.hpp"

using namespace anneal;

TEST(LogWeight, AddAndSubAgreeWithLinearArithmetic) {
  EXPECT_NEAR(log_add(std::log(2.0), std::log(3.0)), std::log(5.0), 1e-15);
  EXPECT_NEAR(log_sub(std::log(5.0), std::log(3.0)), std::log(2.0), 1e-15);
  EXPECT_EQ(log_add(kNegInf, 1.5), 1.5);
  EXPECT_EQ(log_sub(2.0, 2.0), kNegInf);
  std::vector<double> xs = {1000.0, 1000.0, kNegInf};
  EXPECT_NEAR(log_sum_exp(xs), 1000.0 + std::numbers::ln2, 1e-12);
}

TEST(LogWeight, RejectsNanAndPositiveInfinity) {
  EXPECT_THROW(LogWeight(std::nan("")), InvalidArgument);
  EXPECT_THROW(LogWeight(std::numeric_limits<double>::infinity()), InvalidArgument);
  EXPECT_TRUE(LogWeight::zero().is_zero());
  EXPECT_NEAR((LogWeight::from_linear(2.0) * LogWeight::from_linear(4.0)).linear(), 8.0, 1e-14);
}

TEST(Beta, InfinityIsAStateNotAValue) {
  EXPECT_THROW(Beta(-0.5), InvalidArgument);
  EXPECT_THROW(Beta(std::numeric_limits<double>::infinity()), InvalidArgument);
  EXPECT_THROW(Beta::infinity().value(), InvalidArgument);
  EXPECT_LT(Beta(1e300), Beta::infinity());
  EXPECT_EQ(Beta::infinity(), Beta::infinity());
  EXPECT_EQ(to_string(Beta::infinity()), "inf");
}

TEST(PartitionFunction, EvaluatesClosedForms) {
  // Z = 1 + 2e^{-b} + e^{-2b} = (1 + e^{-b})^2
  auto z = PartitionFunction::from_counts(std::vector<double>{1, 2, 1});
  for (double b : {0.0, 0.3, 2.0, 40.0}) {
    EXPECT_NEAR(z.log_z(Beta(b)), 2.0 * std::log1p(std::exp(-b)), 1e-14) << b;
  }
  EXPECT_EQ(z.log_z(Beta::infinity()), 0.0);
  EXPECT_NEAR(z.log_A(), std::log(4.0), 1e-15);
  // Negative arguments are needed by the reverse condition.
  EXPECT_NEAR(z.log_z(-1.0), 2.0 * std::log1p(std::exp(1.0)), 1e-13);
  // f'(b) = -E[H] = -2 e^{-b}/(1+e^{-b})
  EXPECT_NEAR(z.f_prime(0.0), -1.0, 1e-14);
}

TEST(PartitionFunction, RequiresLeadingCoefficientAtLeastOne) {
  EXPECT_THROW(PartitionFunction({-0.1, 1.0}), InvalidArgument);
  EXPECT_THROW(PartitionFunction({}), InvalidArgument);
  EXPECT_THROW(PartitionFunction({0.0, std::nan("")}), InvalidArgument);
  auto z = PartitionFunction({std::log(4.0), std::log(8.0)});
  EXPECT_NEAR(z.normalized().log_coeff(1), std::log(2.0), 1e-15);
  EXPECT_THROW(z.scaled(-2.0), InvalidArgument);
}

TEST(PartitionFunction, IntervalMassSumsToOne) {
  auto z = PartitionFunction::from_counts(std::vector<double>{1, 5, 0, 7, 2});
  for (double b : {0.0, 0.7, 3.0}) {
    double const total = log_add(z.log_interval_mass(0, 1, Beta(b)), z.log_interval_mass(2, 4, Beta(b)));
    EXPECT_NEAR(total, 0.0, 1e-14);
  }
  EXPECT_EQ(z.log_interval_mass(2, 2, Beta(1.0)), kNegInf);
  EXPECT_EQ(z.log_interval_mass(0, 0, Beta::infinity()), 0.0);
}

TEST(ChebyshevRatio, MatchesDirectFormula) {
  auto z = PartitionFunction::from_counts(std::vector<double>{1, 3, 3, 1});
  auto lz = [](double x) { return 3.0 * std::log1p(std::exp(-x)); };
  double const b = 0.4, bp = 1.1;
  EXPECT_NEAR(log_chebyshev_ratio(z, Beta(b), Beta(bp)), lz(2 * bp - b) + lz(b) - 2 * lz(bp), 1e-13);
  EXPECT_NEAR(log_chebyshev_ratio(z, Beta(b), Beta::infinity()), lz(b), 1e-14);
  EXPECT_EQ(log_chebyshev_ratio(z, Beta(b), Beta(b)), 0.0);
  EXPECT_NEAR(log_reverse_ratio(z, Beta(b), Beta(bp)), lz(2 * b - bp) + lz(bp) - 2 * lz(b), 1e-13);
  EXPECT_TRUE(std::isinf(log_reverse_ratio(z, Beta(b), Beta::infinity())));
  EXPECT_THROW(log_chebyshev_ratio(z, Beta(2.0), Beta(1.0)), InvalidArgument);
}

TEST(Schedule, ValidatesShape) {
  EXPECT_THROW(CoolingSchedule({Beta(0.1), Beta::infinity()}, {Move::Final}), MalformedSchedule);
  EXPECT_THROW(CoolingSchedule({Beta(0.0), Beta(1.0)}, {Move::Final}), MalformedSchedule);
  EXPECT_THROW(CoolingSchedule({Beta(0.0), Beta(1.0), Beta(1.0), Beta::infinity()},
                               {Move::Long, Move::Long, Move::Final}),
               MalformedSchedule);
  EXPECT_THROW(CoolingSchedule({Beta(0.0), Beta::infinity()}, {}), MalformedSchedule);
  auto s = CoolingSchedule::uniform_tag({Beta(0.0), Beta(1.0), Beta::infinity()}, Move::Optimal);
  EXPECT_EQ(s.length(), 2u);
  EXPECT_EQ(s.moves().back(), Move::Final);
  EXPECT_EQ(parse_move(to_string(Move::Interval)), Move::Interval);
}

TEST(Schedule, TruncationReplacesFirstPointPastTarget) {
  auto s = CoolingSchedule::uniform_tag({Beta(0.0), Beta(0.5), Beta(2.0), Beta::infinity()}, Move::Long);
  auto t = s.truncated_at(Beta(1.0));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.back(), Beta(1.0));
  EXPECT_EQ(s.truncated_at(Beta(0.5)).size(), 2u);
}

TEST(Verify, ConstantZAcceptsTheOneStepSchedule) {
  auto z = PartitionFunction({0.0});
  auto s = CoolingSchedule::uniform_tag({Beta(0.0), Beta::infinity()}, Move::Final);
  EXPECT_TRUE(verify_schedule(z, s, 1.0).passed);
  EXPECT_TRUE(verify_reversible(z, s, 1.0).passed);
}

TEST(Verify, FlagsTheWorstStep) {
  // Z = (1,1): Z(0)/Z(inf) = 2.
  auto z = PartitionFunction({0.0, 0.0});
  auto s = CoolingSchedule::uniform_tag({Beta(0.0), Beta::infinity()}, Move::Final);
  auto r = verify_schedule(z, s, 1.9);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.worst_log_ratio, std::numbers::ln2, 1e-15);
  EXPECT_TRUE(verify_schedule(z, s, 2.0).passed);
}
