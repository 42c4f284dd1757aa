#include <gtest/gtest.h>

#include <cmath>

#include "noregret/errors.hpp"
#include "noregret/schedules.hpp"
#include "support.hpp"

using namespace noregret;

TEST(Schedule, ValueExamples) {
  EXPECT_DOUBLE_EQ(ParameterSchedule::inv_sqrt(1.0).value_at(4), 0.5);
  EXPECT_DOUBLE_EQ(ParameterSchedule::harmonic(2.0).value_at(0), 2.0);
  EXPECT_DOUBLE_EQ(ParameterSchedule::power(1.0, 0.5).value_at(9), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(ParameterSchedule::anytime(1.0, 2.0, 1.0).value_at(8), 0.5);
}

TEST(Schedule, ZeroStageEqualsFirst) {
  for (const auto& s : {ParameterSchedule::constant(0.3), ParameterSchedule::inv_sqrt(2.0),
                        ParameterSchedule::harmonic(1.5), ParameterSchedule::power(1.0, 0.3),
                        ParameterSchedule::anytime(1.0, std::log(5.0), 2.0),
                        ParameterSchedule::doubling(1.0)}) {
    EXPECT_EQ(s.value_at(0), s.value_at(1)) << s.describe();
  }
}

TEST(Schedule, RejectsBadParameters) {
  EXPECT_THROW(ParameterSchedule::constant(0.0), InvalidInput);
  EXPECT_THROW(ParameterSchedule::inv_sqrt(-1.0), InvalidInput);
  EXPECT_THROW(ParameterSchedule::power(1.0, 1.0), InvalidInput);
  EXPECT_THROW(ParameterSchedule::power(1.0, 0.0), InvalidInput);
  EXPECT_THROW(ParameterSchedule::anytime(1.0, 1.0, 0.0), InvalidInput);
}

TEST(Schedule, PositiveAndNonincreasingForRandomParameters) {
  SplitMix64 rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const double eta = rng.uniform(0.01, 10.0);
    const double alpha = rng.uniform(0.05, 0.95);
    for (const auto& s : {ParameterSchedule::constant(eta), ParameterSchedule::inv_sqrt(eta),
                          ParameterSchedule::harmonic(eta), ParameterSchedule::power(eta, alpha),
                          ParameterSchedule::anytime(rng.uniform(0.5, 2), rng.uniform(0.1, 3),
                                                     rng.uniform(0.5, 2)),
                          ParameterSchedule::doubling(eta)}) {
      double prev = s.value_at(1);
      for (std::uint64_t n = 2; n <= 10000; ++n) {
        const double v = s.value_at(n);
        ASSERT_GT(v, 0.0);
        ASSERT_LE(v, prev) << s.describe() << " at n=" << n;
        prev = v;
      }
    }
  }
}

TEST(Schedule, PartialSumIncrementsAreExact) {
  for (const auto& s : {ParameterSchedule::constant(0.7), ParameterSchedule::inv_sqrt(1.3),
                        ParameterSchedule::harmonic(0.9), ParameterSchedule::power(2.0, 0.25)}) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      // Direct left-to-right sum as an independent oracle.
      double direct = 0.0;
      for (std::uint64_t k = 1; k <= n; ++k) direct += s.value_at(k - 1);
      EXPECT_NEAR(s.partial_sum(n), direct, 1e-12 * direct);
      EXPECT_NEAR(s.partial_sum(n) - s.partial_sum(n - 1), s.value_at(n - 1), 1e-12 * direct);
    }
  }
}

TEST(Schedule, PartialSumClosedFormBounds) {
  EXPECT_NEAR(ParameterSchedule::constant(0.4).partial_sum(25), 10.0, 1e-12);
  for (std::uint64_t n : {1u, 10u, 100u, 10000u}) {
    const double nn = static_cast<double>(n);
    EXPECT_LE(ParameterSchedule::inv_sqrt(1.7).partial_sum(n), 1.7 * (1 + 2 * std::sqrt(nn)));
    for (double alpha : {0.25, 0.5, 0.75}) {
      EXPECT_LE(ParameterSchedule::power(1.2, alpha).partial_sum(n),
                1.2 * (1 + std::pow(nn, 1 - alpha) / (1 - alpha)));
    }
    EXPECT_LE(ParameterSchedule::harmonic(1.0).partial_sum(n), 2.0 + std::log(nn));
  }
}

TEST(Schedule, DoublingIsConstantWithinBlocks) {
  const auto s = ParameterSchedule::doubling(1.0);
  EXPECT_DOUBLE_EQ(s.value_at(1), 1.0);
  EXPECT_DOUBLE_EQ(s.value_at(2), std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(s.value_at(3), std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(s.value_at(4), 0.5);
  EXPECT_DOUBLE_EQ(s.value_at(7), 0.5);
  EXPECT_FALSE(s.block_start(1));
  EXPECT_TRUE(s.block_start(2));
  EXPECT_FALSE(s.block_start(3));
  EXPECT_TRUE(s.block_start(1024));
  EXPECT_FALSE(ParameterSchedule::constant(1.0).block_start(2));
}

TEST(Schedule, ParseRoundTrip) {
  for (auto kind : {ScheduleKind::constant, ScheduleKind::inv_sqrt, ScheduleKind::harmonic,
                    ScheduleKind::power, ScheduleKind::anytime, ScheduleKind::doubling}) {
    EXPECT_EQ(parse_schedule_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_schedule_kind("cosine"), InvalidInput);
}

TEST(OptimalConstant, Examples) {
  for (std::uint64_t n : {10u, 1000u}) {
    for (double d : {2.0, 10.0}) {
      EXPECT_NEAR(optimal_constant(1, std::log(d), 1, n), std::sqrt(2 * std::log(d) / n), 1e-15);
    }
  }
  EXPECT_DOUBLE_EQ(optimal_constant(1, 2, 1, 16), 0.5);
  EXPECT_THROW(optimal_constant(ParameterSchedule::doubling(1.0), 1, 1, 1, 16), Unsupported);
}

TEST(OptimalConstant, MinimisesTheConstantParameterBound) {
  // depth/eta + M^2 eta n / (2K) scanned on a fine grid.
  const double K = 1.5, depth = 0.8, M = 2.0;
  const std::uint64_t n = 400;
  const double best = optimal_constant(K, depth, M, n);
  auto bound = [&](double eta) { return depth / eta + M * M * eta * n / (2 * K); };
  for (double eta = best / 3; eta < best * 3; eta *= 1.01) {
    EXPECT_GE(bound(eta), bound(best) - 1e-12);
  }
}
