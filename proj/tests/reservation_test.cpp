#include <gtest/gtest.h>

#include <random>

#include "pandora/reservation.hpp"
#include "test_support.hpp"

namespace pandora {
namespace {

using testing::sigma_bruteforce;

Instance uniform_column(double cost, std::vector<double> values) {
  Instance inst;
  inst.costs = {cost};
  for (double v : values) inst.scenarios.push_back({{v}, 1.0});
  return inst;
}

TEST(SigmaClosedForm, TwoValues) {
  const Instance inst = uniform_column(1.0, {0.0, 4.0});
  const auto state = ResidualState::initial(inst);
  ASSERT_DOUBLE_EQ(sigma_bruteforce(0, state, inst), 2.0);
  const auto r = sigma_closed_form(0, state, inst);
  EXPECT_DOUBLE_EQ(r.sigma, 2.0);
  EXPECT_EQ(r.covered, (std::vector<ScenarioId>{0}));
}

TEST(SigmaClosedForm, FreeBoxReturnsMinimumValue) {
  const Instance inst = uniform_column(1.0, {10.0});
  auto state = ResidualState::initial(inst);
  state.open(0);
  const auto r = sigma_closed_form(0, state, inst);
  EXPECT_DOUBLE_EQ(r.sigma, 10.0);
  EXPECT_EQ(r.covered, (std::vector<ScenarioId>{0}));
}

TEST(SigmaClosedForm, AllInfinite) {
  const Instance inst = uniform_column(1.0, {kInfinity, kInfinity});
  const auto r = sigma_closed_form(0, ResidualState::initial(inst), inst);
  EXPECT_EQ(r.sigma, kInfinity);
  EXPECT_TRUE(r.covered.empty());
}

TEST(SigmaClosedForm, EmptyAliveThrows) {
  const Instance inst = uniform_column(1.0, {1.0});
  auto state = ResidualState::initial(inst);
  state.alive.clear();
  EXPECT_THROW(sigma_closed_form(0, state, inst), Error);
  EXPECT_THROW(sigma_fixed_point(0, state, inst), Error);
  EXPECT_THROW(argmin_sigma(state, inst), Error);
}

TEST(SigmaFixedPoint, Examples) {
  {
    const Instance inst = uniform_column(1.0, {0.0, 4.0});
    EXPECT_DOUBLE_EQ(sigma_fixed_point(0, ResidualState::initial(inst), inst), 2.0);
  }
  {
    const Instance inst = uniform_column(0.0, {10.0});
    EXPECT_DOUBLE_EQ(sigma_fixed_point(0, ResidualState::initial(inst), inst), 10.0);
  }
  {
    const Instance inst = uniform_column(1.0, {5.0});
    EXPECT_DOUBLE_EQ(sigma_fixed_point(0, ResidualState::initial(inst), inst), 6.0);
  }
  {
    const Instance inst = uniform_column(1.0, {kInfinity});
    EXPECT_EQ(sigma_fixed_point(0, ResidualState::initial(inst), inst), kInfinity);
  }
}

TEST(ArgminSigma, TieGoesToLowestIndex) {
  const Instance inst = testing::instance_i1();
  const auto state = ResidualState::initial(inst);
  ASSERT_DOUBLE_EQ(sigma_bruteforce(0, state, inst), 2.0);
  ASSERT_DOUBLE_EQ(sigma_bruteforce(1, state, inst), 2.0);
  const auto r = argmin_sigma(state, inst);
  EXPECT_EQ(r.box, 0u);
  EXPECT_DOUBLE_EQ(r.sigma, 2.0);
  EXPECT_EQ(r.covered, (std::vector<ScenarioId>{0}));
}

TEST(ArgminSigma, InstanceI2) {
  const Instance inst = testing::instance_i2();
  const auto state = ResidualState::initial(inst);
  ASSERT_DOUBLE_EQ(sigma_bruteforce(0, state, inst), 3.0);
  ASSERT_DOUBLE_EQ(sigma_bruteforce(1, state, inst), 3.75);
  const auto r = argmin_sigma(state, inst);
  EXPECT_EQ(r.box, 0u);
  EXPECT_DOUBLE_EQ(r.sigma, 3.0);
  EXPECT_EQ(r.covered, (std::vector<ScenarioId>{0}));
}

TEST(ArgminSigma, SingleBoxSingleScenario) {
  const Instance inst = testing::single_box_instance(1.0, 5.0);
  const auto r = argmin_sigma(ResidualState::initial(inst), inst);
  EXPECT_EQ(r.box, 0u);
  EXPECT_DOUBLE_EQ(r.sigma, 6.0);
  EXPECT_EQ(r.covered, (std::vector<ScenarioId>{0}));
}

TEST(ArgminSigma, UncoverableThrows) {
  const Instance inst{{1.0, 1.0}, {{{kInfinity, kInfinity}, 1.0}}};
  EXPECT_THROW(argmin_sigma(ResidualState::initial(inst), inst), Error);
}

// Random residual states, small enough for exhaustive subset enumeration.
class SigmaProperties : public ::testing::Test {
 protected:
  template <typename Fn>
  void for_random_states(std::size_t count, Fn&& fn) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 0; seed < count; ++seed) {
      const Instance inst = testing::random_small_instance(seed, 4, 10);
      const ResidualState state = testing::random_state(inst, rng);
      for (BoxId b = 0; b < inst.box_count(); ++b) fn(inst, state, b);
    }
  }
};

TEST_F(SigmaProperties, ClosedFormMatchesFixedPointAndBruteForce) {
  for_random_states(300, [](const Instance& inst, const ResidualState& state, BoxId b) {
    const double closed = sigma_closed_form(b, state, inst).sigma;
    const double fixed = sigma_fixed_point(b, state, inst);
    const double brute = sigma_bruteforce(b, state, inst);
    if (is_finite(closed) || is_finite(fixed)) {
      EXPECT_NEAR(closed, fixed, 1e-9);
    } else {
      EXPECT_EQ(fixed, kInfinity);
    }
    if (is_finite(brute)) {
      EXPECT_NEAR(closed, brute, 1e-12);
    } else {
      EXPECT_EQ(closed, kInfinity);
    }
  });
}

TEST_F(SigmaProperties, ClosedTieRule) {
  for_random_states(300, [](const Instance& inst, const ResidualState& state, BoxId b) {
    const auto r = sigma_closed_form(b, state, inst);
    if (!is_finite(r.sigma)) return;
    ASSERT_FALSE(r.covered.empty());
    double w_a = 0.0;
    double wv_a = 0.0;
    for (ScenarioId s : state.alive) {
      const double v = inst.value(s, b);
      const bool in = std::binary_search(r.covered.begin(), r.covered.end(), s);
      if (v < r.sigma - 1e-9) {
        EXPECT_TRUE(in);
      }
      if (v > r.sigma + 1e-9) {
        EXPECT_FALSE(in);
      }
      if (in) {
        w_a += inst.weight(s);
        wv_a += inst.weight(s) * v;
      }
    }
    // The covered set itself attains the minimum.
    const double mass = inst.weight_of(state.alive);
    EXPECT_NEAR((state.residual_costs[b] * mass + wv_a) / w_a, r.sigma, 1e-9);
  });
}

TEST_F(SigmaProperties, Monotonicity) {
  for_random_states(200, [](const Instance& inst, const ResidualState& state, BoxId b) {
    const double base = sigma_closed_form(b, state, inst).sigma;

    ResidualState pricier = state;
    pricier.residual_costs[b] += 0.5;
    EXPECT_GE(sigma_closed_form(b, pricier, inst).sigma, base - 1e-12);

    Instance cheaper = inst;
    for (auto& s : cheaper.scenarios) {
      if (is_finite(s.values[b]) && s.values[b] >= 1.0) {
        s.values[b] -= 1.0;
        break;
      }
    }
    EXPECT_LE(sigma_closed_form(b, state, cheaper).sigma, base + 1e-12);
  });
}

}  // namespace
}  // namespace pandora
