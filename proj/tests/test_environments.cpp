#include <gtest/gtest.h>

#include <cmath>

#include "noregret/environments.hpp"
#include "noregret/errors.hpp"
#include "support.hpp"

using namespace noregret;
using support::random_vector;

namespace {

void expect_vec_near(const Vector& a, const Vector& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "coordinate " << i;
}

}  // namespace

TEST(PayoffStream, FixedEmitsInOrderThenExhausts) {
  auto s = PayoffStream::fixed({{1, 0}, {0, 1}, {0.5, 0.5}});
  EXPECT_FALSE(s.adaptive());
  EXPECT_EQ(s.length(), 3u);
  expect_vec_near(s.next(), {1, 0}, 0.0);
  expect_vec_near(s.next(), {0, 1}, 0.0);
  expect_vec_near(s.next(), {0.5, 0.5}, 0.0);
  EXPECT_TRUE(s.exhausted());
  EXPECT_THROW(s.next(), InvalidInput);
}

TEST(PayoffStream, FixedRejectsPayoffsAboveTheBound) {
  EXPECT_THROW(PayoffStream::fixed({{2, 0}}, Norm::l1, 1.0), InvalidInput);
}

TEST(PayoffStream, AdversarialExample) {
  auto s = PayoffStream::adversarial_best_response(2, 1.0, Norm::l1, 0);
  EXPECT_TRUE(s.adaptive());
  expect_vec_near(s.next(Vector{0.5, 0.5}), {1, -1}, 0.0);
  expect_vec_near(s.next(Vector{0.7, 0.3}), {-1, 1}, 0.0);
  EXPECT_THROW(s.next(), InvalidInput);
}

TEST(PayoffStream, AdversarialMaximisesAgainstBestVertex) {
  // For each x the emitted u attains max over the dual ball of <u, e_j - x>
  // with j the least-played coordinate; check against random dual-ball points.
  SplitMix64 rng(40);
  for (Norm primal : {Norm::l1, Norm::l2, Norm::linf}) {
    auto s = PayoffStream::adversarial_best_response(4, 2.0, primal, 0);
    for (int t = 0; t < 50; ++t) {
      const Vector x = support::random_simplex_point(rng, 4);
      const auto j = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
      Vector z = scaled(x, -1.0);
      z[j] += 1.0;
      const Vector u = s.next(x);
      EXPECT_LE(norm(u, dual_of(primal)), 2.0 + 1e-12);
      for (int r = 0; r < 200; ++r) {
        Vector v = random_vector(rng, 4, -1, 1);
        v = scaled(v, 2.0 / norm(v, dual_of(primal)));
        EXPECT_GE(dot(u, z), dot(v, z) - 1e-12);
      }
    }
  }
}

TEST(PayoffStream, IidIsReproducibleAndBounded) {
  for (Norm primal : {Norm::l1, Norm::l2, Norm::linf}) {
    auto a = PayoffStream::iid_uniform(5, 0.7, primal, 11);
    auto b = PayoffStream::iid_uniform(5, 0.7, primal, 11);
    auto c = PayoffStream::iid_uniform(5, 0.7, primal, 12);
    bool differs = false;
    for (int k = 0; k < 10000; ++k) {
      const Vector u = a.next();
      EXPECT_EQ(u, b.next());
      differs |= u != c.next();
      ASSERT_LE(norm(u, dual_of(primal)), 0.7 + 1e-12);
    }
    EXPECT_TRUE(differs);
  }
}

TEST(PayoffStream, ReseededRestartsTheSequence) {
  auto a = PayoffStream::iid_uniform(3, 1.0, Norm::l1, 5);
  const Vector first = a.next();
  auto b = a.reseeded(5);
  EXPECT_EQ(b.next(), first);
}

TEST(LossOracle, SubgradientExamples) {
  const auto body = ConvexBody::ball({0, 0, 0}, 2.0);
  const auto quad = LossOracle::quadratic({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {0, 0, 0}, body);
  expect_vec_near(quad.subgradient(Vector{0.3, -0.2, 1.0}), {0.3, -0.2, 1.0}, 0.0);
  const auto abs = LossOracle::abs_distance({0.5, 0, -1}, body);
  expect_vec_near(abs.subgradient(Vector{0.5, 0, -1}), {0, 0, 0}, 0.0);
  expect_vec_near(abs.subgradient(Vector{0.7, 0, -1.5}), {1, 0, -1}, 0.0);
  const auto lin = LossOracle::linear({1, -2, 3}, body);
  expect_vec_near(lin.subgradient(Vector{0, 0, 0}), {1, -2, 3}, 0.0);
  expect_vec_near(lin.subgradient(Vector{1, 1, 1}), {1, -2, 3}, 0.0);
}

TEST(LossOracle, OutsideBodyIsDomainError) {
  const auto lin = LossOracle::linear({1, 1}, ConvexBody::simplex(2));
  EXPECT_THROW(lin.value(Vector{1, 1}), DomainError);
  EXPECT_THROW(lin.subgradient(Vector{2, -1}), DomainError);
}

TEST(LossOracle, AsymmetricQuadraticRejected) {
  EXPECT_THROW(LossOracle::quadratic({{1, 2}, {0, 1}}, {0, 0}, ConvexBody::unit_box(2)),
               InvalidInput);
}

TEST(LossOracle, SubgradientInequalityOnRandomPairs) {
  SplitMix64 rng(41);
  const auto body = ConvexBody::box({-1, -1, -1}, {1, 2, 1});
  const std::vector<LossOracle> oracles = {
      LossOracle::quadratic({{2, 0.5, 0}, {0.5, 1, 0.2}, {0, 0.2, 3}}, {0.1, -1, 0.4}, body, 0.3),
      LossOracle::squared_distance({3, 0, 0}, body, 2.0), LossOracle::linear({1, -1, 0.5}, body),
      LossOracle::abs_distance({0.2, 0.3, -0.4}, body)};
  for (const auto& f : oracles) {
    for (int t = 0; t < 100; ++t) {
      const Vector x = body.project(random_vector(rng, 3, -1.5, 2.5));
      const Vector y = body.project(random_vector(rng, 3, -1.5, 2.5));
      EXPECT_GE(f.value(y), f.value(x) + dot(f.subgradient(x), add_scaled(y, -1.0, x)) - 1e-9);
    }
  }
}

TEST(LossOracle, LipschitzConstantBoundsSubgradients) {
  SplitMix64 rng(42);
  const auto ball = ConvexBody::ball({0.5, 0, 0}, 1.0);
  const auto box = ConvexBody::unit_box(3);
  const std::vector<LossOracle> oracles = {
      LossOracle::quadratic({{2, 0.5, 0}, {0.5, 1, 0.2}, {0, 0.2, 3}}, {0.1, -1, 0.4}, ball),
      LossOracle::quadratic({{2, 0.5, 0}, {0.5, 1, 0.2}, {0, 0.2, 3}}, {0.1, -1, 0.4}, box),
      LossOracle::squared_distance({3, 0, 0}, ball), LossOracle::abs_distance({0, 0, 0}, box)};
  for (const auto& f : oracles) {
    for (int t = 0; t < 500; ++t) {
      const Vector x = f.body().project(random_vector(rng, 3, -2, 2));
      EXPECT_LE(norm(f.subgradient(x), f.body().dual_norm()), f.lipschitz() + 1e-9);
    }
  }
}

TEST(LossOracle, KnownMinimaMatchSampling) {
  SplitMix64 rng(43);
  const auto ball = ConvexBody::ball({0, 0}, 1.0);
  const auto dist = LossOracle::squared_distance({2, 0}, ball);
  ASSERT_TRUE(dist.known_minimum());
  EXPECT_NEAR(*dist.known_minimum(), 0.5, 1e-15);
  const auto lin = LossOracle::linear({1, -1}, ConvexBody::unit_box(2));
  EXPECT_NEAR(*lin.known_minimum(), -1.0, 1e-15);
  for (int t = 0; t < 2000; ++t) {
    const Vector x = support::random_ball_point(rng, 2, 1.0);
    EXPECT_GE(dist.value(x), *dist.known_minimum() - 1e-12);
  }
}

TEST(NoisyOracle, NoiseIsCentredAndBounded) {
  const auto body = ConvexBody::ball({0, 0, 0}, 1.0);
  const auto f = LossOracle::quadratic({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {0.2, 0, -0.1}, body);
  NoisyOracle noisy(f, 0.5, 44);
  const Vector x{0.1, -0.3, 0.2};
  const Vector g = f.subgradient(x);
  constexpr int N = 10000;
  Vector mean(3, 0.0);
  for (int r = 0; r < N; ++r) {
    const Vector obs = noisy.subgradient(x);
    EXPECT_LE(max_abs_diff(obs, g), 0.5 + 1e-12);
    add_in_place(mean, obs);
  }
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(mean[i] / N, g[i], 5 * 0.5 / std::sqrt(N));
  EXPECT_NEAR(noisy.observed_bound(), f.lipschitz() + 0.5 * std::sqrt(3.0), 1e-12);
}

TEST(NoisyOracle, RawNoiseSampleMeanWithinThreeSigma) {
  const auto f = LossOracle::linear({0, 0}, ConvexBody::unit_box(2));
  NoisyOracle noisy(f, 1.0, 45);
  constexpr int N = 100000;
  const double sigma = 1.0 / std::sqrt(3.0);
  double s0 = 0.0, s1 = 0.0;
  for (int r = 0; r < N; ++r) {
    const Vector xi = noisy.subgradient(Vector{0.5, 0.5});
    s0 += xi[0];
    s1 += xi[1];
  }
  EXPECT_LE(std::abs(s0 / N), 3 * sigma / std::sqrt(N));
  EXPECT_LE(std::abs(s1 / N), 3 * sigma / std::sqrt(N));
}

TEST(NoisyOracle, ReseededIsReproducible) {
  const auto f = LossOracle::linear({1, 2}, ConvexBody::unit_box(2));
  NoisyOracle a(f, 0.3, 1);
  NoisyOracle b = a.reseeded(1);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.subgradient(Vector{0, 0}), b.subgradient(Vector{0, 0}));
}

TEST(NoisyOracle, WrapsPayoffStreams) {
  NoisyOracle noisy(PayoffStream::fixed({{1, 0}, {0, 1}}), 0.1, 3);
  const Vector u = noisy.next_payoff();
  EXPECT_NEAR(u[0], 1.0, 0.1);
  EXPECT_NEAR(u[1], 0.0, 0.1);
}

TEST(SampleAction, Examples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_EQ(sample_action(Vector{1, 0, 0}, seed), 0u);
    EXPECT_EQ(sample_action(Vector{0.3, 0.7}, seed), sample_action(Vector{0.3, 0.7}, seed));
  }
  SplitMix64 rng(46);
  int ones = 0;
  constexpr int N = 100000;
  for (int k = 0; k < N; ++k) ones += sample_action(Vector{0.5, 0.5}, rng) == 1 ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(ones) / N, 0.5, 0.01);
}

TEST(SampleAction, FrequenciesMatchDistribution) {
  const Vector x{0.1, 0.6, 0.3};
  SplitMix64 rng(47);
  std::vector<int> counts(3, 0);
  constexpr int N = 200000;
  for (int k = 0; k < N; ++k) ++counts[sample_action(x, rng)];
  for (std::size_t i = 0; i < 3; ++i) {
    const double sd = std::sqrt(x[i] * (1 - x[i]) / N);
    EXPECT_NEAR(static_cast<double>(counts[i]) / N, x[i], 4 * sd);
  }
}

TEST(SampleAction, InvalidDistributionsRejected) {
  EXPECT_THROW(sample_action(Vector{0.5, 0.6}, 1), InvalidInput);
  EXPECT_THROW(sample_action(Vector{-0.1, 1.1}, 1), InvalidInput);
  EXPECT_THROW(sample_action(Vector{}, 1), InvalidInput);
}
