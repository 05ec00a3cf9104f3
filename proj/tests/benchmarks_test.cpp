#include <gtest/gtest.h>

#include <numeric>

#include "pandora/benchmarks.hpp"
#include "pandora/solver.hpp"
#include "test_support.hpp"

namespace pandora {
namespace {

TEST(SaCost, Examples) {
  const Instance i1 = testing::instance_i1();
  ASSERT_DOUBLE_EQ(testing::sa_cost_oracle({0, 1}, i1), 1.5);
  EXPECT_DOUBLE_EQ(sa_cost({0, 1}, i1), 1.5);

  EXPECT_DOUBLE_EQ(sa_cost({0}, testing::single_box_instance(1.0, 5.0)), 6.0);

  const Instance i2 = testing::instance_i2();
  ASSERT_DOUBLE_EQ(testing::sa_cost_oracle({0, 1}, i2), 3.0);
  EXPECT_DOUBLE_EQ(sa_cost({0, 1}, i2), 3.0);
}

TEST(SaCost, UncoveredScenarioIsInfinite) {
  const Instance inst{{1.0, 1.0}, {{{kInfinity, 1.0}, 1.0}}};
  EXPECT_EQ(sa_cost({0}, inst), kInfinity);
}

TEST(PaOptBruteforce, Examples) {
  const auto i1 = pa_opt_bruteforce(testing::instance_i1());
  EXPECT_DOUBLE_EQ(i1.cost, 1.5);
  EXPECT_EQ(i1.permutation, (std::vector<BoxId>{0, 1}));

  const Instance i2 = testing::instance_i2();
  const double oracle = testing::pa_opt_oracle(i2);
  ASSERT_NEAR(oracle, 8.5 / 3.0, 1e-12);
  const auto opt = pa_opt_bruteforce(i2);
  EXPECT_NEAR(opt.cost, 8.5 / 3.0, 1e-12);
  EXPECT_EQ(opt.permutation, (std::vector<BoxId>{1, 0}));

  const Instance single = testing::single_box_instance(1.0, 5.0);
  EXPECT_DOUBLE_EQ(pa_opt_bruteforce(single).cost, sa_cost({0}, single));
}

TEST(PaOptBruteforce, RefusesLargeInstances) {
  const Instance big = random_instance(10, 2, 1);
  EXPECT_THROW(pa_opt_bruteforce(big), Error);
  EXPECT_NO_THROW(pa_opt_bruteforce(random_instance(3, 2, 1), 3));
}

TEST(PaOptBruteforce, MatchesRecursiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::random_small_instance(seed, 5, 6);
    EXPECT_NEAR(pa_opt_bruteforce(inst).cost, testing::pa_opt_oracle(inst), 1e-12);
  }
}

TEST(MsscGreedy, Examples) {
  const double inf = kInfinity;
  // box0 zero on {s1, s2}, box1 on {s3}, box2 on {s2, s3}.
  const Instance a{{1.0, 1.0, 1.0},
                   {{{0.0, inf, inf}, 1.0}, {{0.0, inf, 0.0}, 1.0}, {{inf, 0.0, 0.0}, 1.0}}};
  const auto ra = mssc_greedy(a);
  EXPECT_EQ(ra.order, (std::vector<BoxId>{0, 1}));
  EXPECT_DOUBLE_EQ(ra.expected_cover_time, 4.0 / 3.0);

  const Instance all{{1.0, 1.0}, {{{0.0, 0.0}, 1.0}, {{0.0, 0.0}, 1.0}}};
  const auto rall = mssc_greedy(all);
  EXPECT_EQ(rall.order.size(), 1u);
  EXPECT_DOUBLE_EQ(rall.expected_cover_time, 1.0);

  const std::size_t m = 5;
  Instance identity;
  identity.costs.assign(m, 1.0);
  for (std::size_t s = 0; s < m; ++s) {
    Scenario sc{std::vector<double>(m, inf), 1.0};
    sc.values[s] = 0.0;
    identity.scenarios.push_back(sc);
  }
  EXPECT_DOUBLE_EQ(mssc_greedy(identity).expected_cover_time, (m + 1) / 2.0);
}

TEST(MsscGreedy, RejectsNonMsscInstances) {
  EXPECT_THROW(mssc_greedy(testing::instance_i2()), Error);
}

TEST(MsscGreedy, MatchesPartialUpdates) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = mssc_instance(5, 7, seed);
    const auto greedy = mssc_greedy(inst);
    const auto partial = run_partial(inst);
    std::vector<BoxId> order;
    for (const auto& step : partial.trace) order.push_back(step.box);
    EXPECT_EQ(order, greedy.order);
    EXPECT_EQ(partial.cost.total(), greedy.expected_cover_time);
  }
}

TEST(ProductInstance, Examples) {
  const auto two = product_instance({{{0.0, 0.5}, {2.0, 0.5}}, {{0.0, 0.5}, {2.0, 0.5}}},
                                    {1.0, 1.0});
  ASSERT_EQ(two.scenario_count(), 4u);
  for (const auto& s : two.scenarios) EXPECT_DOUBLE_EQ(s.weight, 0.25);

  const auto one = product_instance({{{5.0, 1.0}}}, {1.0});
  ASSERT_EQ(one.scenario_count(), 1u);
  EXPECT_EQ(one.scenarios[0].values, std::vector<double>{5.0});

  const std::vector<std::vector<SupportPoint>> supports{
      {{0.0, 0.25}, {1.0, 0.75}},
      {{0.0, 0.2}, {1.0, 0.3}, {2.0, 0.5}},
      {{3.0, 0.6}, {4.0, 0.4}}};
  const auto three = product_instance(supports, {1.0, 1.0, 1.0});
  ASSERT_EQ(three.scenario_count(), 12u);
  double mass = 0.0;
  for (const auto& s : three.scenarios) {
    double expected = 1.0;
    for (std::size_t b = 0; b < 3; ++b) {
      for (const auto& p : supports[b]) {
        if (p.value == s.values[b]) expected *= p.probability;
      }
    }
    EXPECT_NEAR(s.weight, expected, 1e-15);
    mass += s.weight;
  }
  EXPECT_NEAR(mass, 1.0, 1e-12);
}

TEST(ProductInstance, Guards) {
  EXPECT_THROW(product_instance({{{0.0, 0.5}}}, {1.0}), Error);
  EXPECT_THROW(product_instance({{}}, {1.0}), Error);
  std::vector<SupportPoint> wide;
  for (int i = 0; i < 100; ++i) wide.push_back({static_cast<double>(i), 0.01});
  EXPECT_THROW(product_instance({wide, wide, wide}, {1.0, 1.0, 1.0}), Error);
}

TEST(BenchmarkReport, Examples) {
  const auto i1 = benchmark_report(testing::instance_i1());
  EXPECT_DOUBLE_EQ(i1.ratio_partial, 1.0);
  EXPECT_DOUBLE_EQ(i1.ratio_full, 1.0);

  const auto i2 = benchmark_report(testing::instance_i2());
  EXPECT_NEAR(i2.ratio_partial, 3.0 / (8.5 / 3.0), 1e-12);
  EXPECT_TRUE(i2.within_bounds());
}

class ApproximationProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ApproximationProperties, RatiosWithinTheoreticalBounds) {
  const Instance inst = testing::random_small_instance(GetParam());
  const auto report = benchmark_report(inst);
  EXPECT_GE(report.ratio_partial, 1.0 - 1e-9);
  EXPECT_LE(report.ratio_partial, kPartialUpdatesBound + 1e-6);
  EXPECT_LE(report.ratio_full, kFullUpdatesBound + 1e-6);
}

// Full updates branch on observed values, so no fixed order bounds them from
// below.
TEST(BenchmarkReport, FullUpdatesCanBeatEveryFixedOrder) {
  const auto report = benchmark_report(testing::random_small_instance(1));
  EXPECT_GE(report.ratio_partial, 1.0);
  EXPECT_LT(report.ratio_full, 1.0);
}

TEST_P(ApproximationProperties, ScenarioAwareDominatesThresholdPolicies) {
  const Instance inst = testing::random_small_instance(GetParam());
  std::mt19937_64 rng(GetParam());
  std::vector<BoxId> order(inst.box_count());
  std::iota(order.begin(), order.end(), BoxId{0});
  std::shuffle(order.begin(), order.end(), rng);
  ThresholdPolicy policy{order, {}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    policy.thresholds.push_back(std::uniform_real_distribution<double>(0.0, 12.0)(rng));
  }
  EXPECT_LE(sa_cost(order, inst), expected_policy_cost(policy, inst).total() + 1e-9);
}

INSTANTIATE_TEST_SUITE_P(RandomInstances, ApproximationProperties,
                         ::testing::Range<std::uint64_t>(0, 100));

}  // namespace
}  // namespace pandora
