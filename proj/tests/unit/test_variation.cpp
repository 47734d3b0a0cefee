#include <doctest.h>

#include "fixtures.hpp"
#include "lulu/semigroup.hpp"
#include "lulu/variation.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lulu;
using namespace lulu::fixtures;

TEST_CASE("total variation of functions") {
  CHECK(total_variation(ramp()) == 4);
  CHECK(total_variation(open_pulse()) == 2);
  CHECK(total_variation(zero()) == 0);
  const PiecewiseLinear spike({{0, 0, 0, 0}, {2, 0, 3, 0}, {4, 0, 0, 0}});
  CHECK(total_variation(spike) == 6);
}

TEST_CASE("total variation of sequences") {
  CHECK(total_variation(DiscreteSignal({0, 0, 5, 0, 0})) == 10);
  CHECK(total_variation(DiscreteSignal({-2, 0, 1, 7})) == 9);
  CHECK(total_variation(DiscreteSignal({4})) == 0);
}

TEST_CASE("trend_on") {
  CHECK(trend_on(ramp(), 0, 4) == Trend::Increasing);
  CHECK(trend_on(negate(ramp()), 1, 3) == Trend::Decreasing);
  CHECK(trend_on(zero(), 0, 4) == Trend::Constant);
  CHECK(trend_on(open_pulse(), 0, 4) == Trend::None);
  CHECK(trend_on(open_pulse(), 0, 1.5) == Trend::Increasing);
  CHECK(trend_on(open_pulse(), 1.5, 4) == Trend::Decreasing);
  // The isolated zero at x = 1 sits between 0 on the left and 1 on the right.
  CHECK(trend_on(open_pulse(), 0.5, 1) == Trend::Constant);
}

TEST_CASE("local delta-monotonicity") {
  CHECK(is_locally_delta_monotone(ramp(), 0.5).holds);
  CHECK(is_locally_delta_monotone(negate(ramp()), 100).holds);

  const auto v = is_locally_delta_monotone(tent(), 0.5);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->lo < 1);
  CHECK(v.witness->hi > 1);
  CHECK(v.witness->hi - v.witness->lo <= 0.5);
  // The witness points really break monotonicity.
  const auto& p = v.witness->sample_points;
  REQUIRE(p.size() == 3);
  const double a = tent()(p[0]), b = tent()(p[1]), c = tent()(p[2]);
  CHECK(b > std::max(a, c));

  // Every window around the apex rises then falls.
  CHECK_FALSE(is_locally_delta_monotone(tent(), 0.01).holds);
  CHECK_THROWS_AS(is_locally_delta_monotone(ramp(), 0), std::invalid_argument);
}

TEST_CASE("local monotonicity at the exact plateau width") {
  // 0 on [0,1), 1 on [1,2], 0 after: a closed plateau of width 1.
  const auto f = closed_pulse();
  CHECK(is_locally_delta_monotone(f, 0.99).holds);
  // [1 - e, 2 + e] has length 1 + 2e > 1, so delta = 1 is still fine.
  CHECK(is_locally_delta_monotone(f, 1).holds);
  CHECK_FALSE(is_locally_delta_monotone(f, 1.01).holds);
  // The open pulse: [1, 2] has length 1 and contains 0, 1, 0.
  CHECK_FALSE(is_locally_delta_monotone(open_pulse(), 1).holds);
  CHECK(is_locally_delta_monotone(open_pulse(), 0.99).holds);
}

TEST_CASE("structural check never contradicts the grid scan") {
  testing::Rng rng(31);
  for (int i = 0; i < 80; ++i) {
    const auto f = testing::random_plf(rng, {20, true});
    const double delta = testing::random_delta(rng, f.domain().span());
    if (is_locally_delta_monotone(f, delta).holds) {
      CHECK(oracle::grid_local_monotone(f, delta, delta / 50));
    }
    const auto g = apply_L(apply_U(f, delta), delta);
    CHECK(is_locally_delta_monotone(g, delta).holds);
  }
}

TEST_CASE("n-monotone sequences") {
  const auto v = is_n_monotone(DiscreteSignal({1, 2, 3, 2, 1}), 1);
  CHECK_FALSE(v.holds);
  CHECK(v.witness_index == 1);
  CHECK(is_n_monotone(DiscreteSignal({1, 2, 2, 5, 9}), 3).holds);
  CHECK(is_n_monotone(DiscreteSignal({0, 0, 0, 0, 0}), 1).holds);
  CHECK(is_n_monotone(DiscreteSignal({0, 0, 5, 0, 0}), 1).holds == false);
  CHECK(is_n_monotone(DiscreteSignal({3, 1}), 4).holds);
  CHECK_FALSE(is_n_monotone(DiscreteSignal({0, 1, 0}), 4).holds);
  CHECK_THROWS_AS(is_n_monotone(DiscreteSignal({1}), 0), std::invalid_argument);
}

TEST_CASE("trend preservation") {
  CHECK(check_trend_preservation(ramp(), OperatorExpr::parse("L", 1), 3, 4).holds);
  const Operator flip = [](const PiecewiseLinear& f) { return negate(f); };
  const auto bad = check_trend_preservation(ramp(), flip, 0, 4);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness);
  CHECK_THROWS_AS(check_trend_preservation(open_pulse(), flip, 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_trend_preservation(ramp(), flip, 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_trend_preservation(ramp(), flip, 3, 5),
                  std::invalid_argument);
}

TEST_CASE("trend preservation on random monotone runs") {
  testing::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto f = testing::random_plf(rng, {20, true});
    const double delta = testing::random_delta(rng, f.domain().span());
    const auto [a, b] = testing::random_monotone_interval(rng, f);
    for (const char* w : {"L", "U", "LU", "UL"}) {
      CHECK(check_trend_preservation(f, OperatorExpr::parse(w, delta), a, b).holds);
    }
  }
}

TEST_CASE("monotone runs cover every segment") {
  const auto runs = monotone_runs(open_pulse());
  CHECK_FALSE(runs.empty());
  for (auto [a, b] : runs) CHECK(trend_on(open_pulse(), a, b) != Trend::None);
}

TEST_CASE("TV decomposition") {
  auto r = tv_decomposition(ramp(), OperatorExpr::parse("L", 1));
  CHECK(r.tv_f == doctest::Approx(4));
  CHECK(r.tv_smooth == doctest::Approx(3.5));
  CHECK(r.tv_residual == doctest::Approx(0.5));
  CHECK(std::abs(r.defect) <= 1e-12);

  r = tv_decomposition(open_pulse(), OperatorExpr::parse("L", 1));
  CHECK(r.tv_f == 2);
  CHECK(r.tv_smooth == 0);
  CHECK(r.tv_residual == 2);
  CHECK(r.defect == 0);

  for (const char* w : {"L", "U", "LU", "UL"}) {
    r = tv_decomposition(zero(), OperatorExpr::parse(w, 0.5));
    CHECK(r.tv_f == 0);
    CHECK(r.defect == 0);
  }

  const Operator twice = [](const PiecewiseLinear& f) { return scale(f, 2); };
  const auto d = decompose(ramp(), twice);
  CHECK(d.report.defect == doctest::Approx(8));
  CHECK(d.residual(4) == -4);
}

TEST_CASE("discrete decomposition") {
  const auto d = decompose_discrete(DiscreteSignal({0, 0, 5, 0, 0}), {Letter::L}, 1);
  CHECK(d.report.tv_f == 10);
  CHECK(d.report.tv_smooth == 0);
  CHECK(d.report.tv_residual == 10);
  CHECK(d.report.defect == 0);
  CHECK(d.residual[2] == 5);
}

TEST_CASE("sampling bridge") {
  testing::Rng rng(33);
  const auto noisy = testing::noisy_fixture(rng);
  const auto g = apply_L(apply_U(noisy, 1), 1);
  const auto r = verify_sampling_bridge(g, 1, 3, 0.2, 0);
  CHECK(r.n_monotone);
  CHECK(r.tv_bounded);
  CHECK(r.tv_sample <= r.tv_function + 1e-9);
  CHECK(r.tv_refinements[0] == doctest::Approx(r.tv_sample));

  const auto m = verify_sampling_bridge(ramp(), 1, 4, 0.1, 0);
  CHECK(m.n_monotone);
  CHECK(m.refinements_nondecreasing);

  const auto e = verify_sampling_bridge(ramp(), 2.5, 1, 1, 0);
  CHECK(e.tv_sample == 4);
  CHECK(e.tv_function == 4);

  CHECK_THROWS_AS(verify_sampling_bridge(ramp(), 1, 3, 0.25, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_sampling_bridge(tent(), 0.5, 1, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_sampling_bridge(ramp(), 1, 0, 0.1, 0), std::invalid_argument);
}
