#include <gtest/gtest.h>

#include <cmath>

#include "noregret/environments.hpp"
#include "noregret/errors.hpp"
#include "noregret/regret.hpp"
#include "noregret/strategies.hpp"
#include "support.hpp"

using namespace noregret;

namespace {

void expect_vec_near(const Vector& a, const Vector& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "coordinate " << i;
}

const double e = std::exp(1.0);

}  // namespace

TEST(Init, Examples) {
  expect_vec_near(init(Regularizer::entropy(3), ParameterSchedule::constant(1)).action(),
                  {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
  expect_vec_near(init(Regularizer::euclidean(ConvexBody::unit_box(2), Vector{0.5, 0.5}),
                       ParameterSchedule::constant(1))
                      .action(),
                  {0.5, 0.5}, 0.0);
  expect_vec_near(init(Regularizer::euclidean(ConvexBody::simplex(2)),
                       ParameterSchedule::constant(1))
                      .action(),
                  {0.5, 0.5}, 1e-15);
  const Strategy s = init(Regularizer::entropy(2), ParameterSchedule::constant(1));
  EXPECT_EQ(s.stage(), 0u);
  expect_vec_near(s.score(), {0, 0}, 0.0);
}

TEST(Step, Examples) {
  Strategy ew = init(Regularizer::entropy(2), ParameterSchedule::constant(1));
  expect_vec_near(ew.step(Vector{1, 0}), {e / (e + 1), 1 / (e + 1)}, 1e-15);

  Strategy ogd(Regularizer::euclidean(ConvexBody::ball({0, 0}, 1)), ParameterSchedule::constant(1));
  expect_vec_near(ogd.step(Vector{3, 4}), {0.6, 0.8}, 1e-15);

  const Vector before = ew.action();
  expect_vec_near(ew.step(Vector{0, 0}), before, 0.0);
}

TEST(Step, ZeroPayoffMovesActionWhenParameterChanges) {
  Strategy s(Regularizer::entropy(2), ParameterSchedule::inv_sqrt(1));
  s.step(Vector{1, 0});
  const Vector x1 = s.action();
  s.step(Vector{0, 0});
  EXPECT_GT(max_abs_diff(s.action(), x1), 1e-3);
}

TEST(Step, MaintainsChoiceInvariant) {
  SplitMix64 rng(30);
  const auto reg = Regularizer::euclidean(ConvexBody::box({0, -1, 0}, {1, 1, 2}));
  const auto sched = ParameterSchedule::power(0.8, 0.3);
  Strategy s(reg, sched);
  for (int k = 0; k < 200; ++k) {
    s.step(support::random_vector(rng, 3, -1, 1));
    expect_vec_near(s.action(), reg.choice(scaled(s.score(), sched.value_at(s.stage()))), 0.0);
  }
}

TEST(Step, RejectsBadPayoffs) {
  Strategy s(Regularizer::entropy(3), ParameterSchedule::constant(1));
  EXPECT_THROW(s.step(Vector{1, 0}), DimensionMismatch);
  EXPECT_THROW(s.step(Vector{1, NAN, 0}), InvalidInput);
}

TEST(Step, DoublingResetsScoreAtBlockStarts) {
  Strategy s(Regularizer::entropy(2), ParameterSchedule::doubling(1));
  s.step(Vector{1, 0});  // n = 1; stage 2 opens a block
  expect_vec_near(s.score(), {0, 0}, 0.0);
  expect_vec_near(s.action(), {0.5, 0.5}, 0.0);
  s.step(Vector{1, 0});  // n = 2
  expect_vec_near(s.score(), {1, 0}, 0.0);
  s.step(Vector{1, 0});  // n = 3; stage 4 opens a block
  expect_vec_near(s.score(), {0, 0}, 0.0);
}

TEST(MakeNamed, BuildsEachFamilyMember) {
  StrategyParams p;
  p.dim = 3;
  p.eta = 0.5;
  p.alpha = 0.25;
  p.body = ConvexBody::ball({0, 0, 0}, 1);
  p.regularizer = Regularizer::euclidean(ConvexBody::simplex(3));
  EXPECT_EQ(make_named(Algorithm::ew, p).schedule().kind(), ScheduleKind::constant);
  EXPECT_EQ(make_named(Algorithm::ew_prime, p).schedule().kind(), ScheduleKind::inv_sqrt);
  EXPECT_EQ(make_named(Algorithm::sfp, p).schedule().kind(), ScheduleKind::harmonic);
  EXPECT_EQ(make_named(Algorithm::vsfp, p).schedule().kind(), ScheduleKind::power);
  EXPECT_EQ(make_named(Algorithm::ogd_l, p).regularizer().body().kind(), BodyKind::l2_ball);
  EXPECT_EQ(make_named(Algorithm::omd_l, p).regularizer().kind(), RegularizerKind::euclidean);
  EXPECT_EQ(make_named(Algorithm::ew, p).regularizer().kind(), RegularizerKind::entropy);
}

TEST(MakeNamed, MissingParametersAreNamed) {
  StrategyParams p;
  p.dim = 3;
  try {
    (void)make_named(Algorithm::ew, p);
    FAIL();
  } catch (const InvalidInput& err) {
    EXPECT_NE(std::string(err.what()).find("eta"), std::string::npos);
  }
  p.eta = 1.0;
  p.regularizer = Regularizer::entropy(3);
  try {
    (void)make_named(Algorithm::vsfp, p);
    FAIL();
  } catch (const InvalidInput& err) {
    EXPECT_NE(std::string(err.what()).find("alpha"), std::string::npos);
  }
  EXPECT_THROW(make_named(Algorithm::ogd_l, p), InvalidInput);
  StrategyParams q;
  q.eta = 1.0;
  EXPECT_THROW(make_named(Algorithm::sfp, q), InvalidInput);
}

TEST(MakeNamed, ParseNames) {
  for (Algorithm a : all_algorithms()) EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_EQ(parse_algorithm("EW'"), Algorithm::ew_prime);
  EXPECT_THROW(parse_algorithm("ADAM"), InvalidInput);
}

TEST(MakeNamed, VsfpHalfWithEntropyIsEwPrime) {
  StrategyParams p;
  p.dim = 4;
  p.eta = 0.9;
  p.alpha = 0.5;
  p.regularizer = Regularizer::entropy(4);
  Strategy vsfp = make_named(Algorithm::vsfp, p);
  Strategy ewp = make_named(Algorithm::ew_prime, p);
  auto s1 = PayoffStream::iid_uniform(4, 1.0, Norm::l1, 5);
  auto s2 = PayoffStream::iid_uniform(4, 1.0, Norm::l1, 5);
  const auto t1 = play_sequence(vsfp, s1, 300);
  const auto t2 = play_sequence(ewp, s2, 300);
  for (std::size_t k = 0; k < t1.actions.size(); ++k) {
    EXPECT_LE(max_abs_diff(t1.actions[k], t2.actions[k]), 1e-12);
  }
}

TEST(MakeNamed, LargeParameterSfpApproachesBestResponse) {
  Strategy s(Regularizer::entropy(3), ParameterSchedule::harmonic(1e3));
  s.step(Vector{0.2, 0.5, 0.1});
  EXPECT_GT(s.action()[1], 1 - 1e-12);
}

TEST(PlaySequence, Examples) {
  Strategy s0 = init(Regularizer::entropy(2), ParameterSchedule::constant(1));
  auto unused = PayoffStream::fixed({{1, 0}});
  const auto t0 = play_sequence(s0, unused, 0);
  ASSERT_EQ(t0.actions.size(), 1u);
  EXPECT_TRUE(t0.payoffs.empty());

  Strategy s = init(Regularizer::entropy(2), ParameterSchedule::constant(1));
  auto two = PayoffStream::fixed({{1, 0}, {0, 1}});
  const auto t = play_sequence(s, two);
  ASSERT_EQ(t.actions.size(), 3u);
  expect_vec_near(t.actions[2], {0.5, 0.5}, 1e-15);

  Strategy c = init(Regularizer::entropy(3), ParameterSchedule::constant(1));
  auto constant = PayoffStream::fixed(std::vector<Vector>(1000, Vector{0.1, 0.3, 0.2}));
  const auto tc = play_sequence(c, constant);
  EXPECT_LT(norm(add_scaled(tc.actions.back(), -1.0, Vector{0, 1, 0}), Norm::l1), 0.01);
}

TEST(PlaySequence, DeterministicAndShiftInvariantForEw) {
  auto run = [](double shift) {
    Strategy s(Regularizer::entropy(5), ParameterSchedule::constant(0.3));
    SplitMix64 rng(31);
    std::vector<Vector> payoffs;
    for (int k = 0; k < 200; ++k) {
      Vector u = support::random_vector(rng, 5, -1, 1);
      for (double& v : u) v += shift * (k % 7);
      payoffs.push_back(u);
    }
    auto stream = PayoffStream::fixed(payoffs, Norm::l1, 1.0 + 6 * std::abs(shift));
    return play_sequence(s, stream).actions;
  };
  const auto a = run(0.0);
  const auto b = run(0.0);
  const auto c = run(2.5);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k], b[k]);
    EXPECT_LE(max_abs_diff(a[k], c[k]), 1e-12);
  }
}

TEST(PlaySequence, AdaptiveStreamSeesCurrentAction) {
  Strategy s(Regularizer::entropy(3), ParameterSchedule::constant(0.5));
  auto adversary = PayoffStream::adversarial_best_response(3, 1.0, Norm::l1, 0);
  const auto t = play_sequence(s, adversary, 50);
  for (std::size_t k = 0; k < t.payoffs.size(); ++k) {
    // The adversary rewards the coordinate the learner plays least.
    const auto& x = t.actions[k];
    const auto j = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
    EXPECT_EQ(t.payoffs[k][j], 1.0);
  }
  auto adaptive = PayoffStream::adversarial_best_response(3, 1.0, Norm::l1, 0);
  EXPECT_THROW(play_sequence(s, adaptive), InvalidInput);
}

TEST(PlaySequence, EmpiricalRegretWithinSquaredNormBound) {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto reg = trial % 2 ? Regularizer::entropy(4)
                               : Regularizer::euclidean(ConvexBody::unit_box(4));
    const auto sched = ParameterSchedule::power(rng.uniform(0.1, 2), rng.uniform(0.1, 0.9));
    Strategy s(reg, sched);
    auto stream = PayoffStream::iid_uniform(4, 1.0, reg.norm(), derive_seed(32, trial));
    RegretLedger ledger(4);
    for (std::uint64_t n = 1; n <= 500; ++n) {
      const Vector x = s.action();
      const Vector u = stream.next(x);
      ledger.record(u, x);
      s.step(u);
      EXPECT_LE(ledger.max_regret(reg.body()), bound_thm2(reg, sched, 1.0, n) + 1e-9);
    }
  }
}
