#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "lulu/envelope.hpp"
#include "lulu/laws.hpp"
#include "support/generators.hpp"

using namespace lulu;
using namespace lulu::fixtures;

namespace {

// Random function on a non-dyadic grid with spacing h.
PiecewiseLinear grid_function(testing::Rng& rng, double h, int n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::bernoulli_distribution jump(0.3);
  std::vector<Breakpoint> nodes;
  double level = u(rng);
  for (int i = 0; i <= n; ++i) {
    Breakpoint b{0.3 + h * i, level, level, level};
    if (jump(rng)) {
      b.right = u(rng);
      b.value = jump(rng) ? u(rng) : b.left;
    }
    nodes.push_back(b);
    level = jump(rng) ? b.right : u(rng);
  }
  return PiecewiseLinear(nodes);
}

}  // namespace

TEST_CASE("law names round trip") {
  for (Law law : all_laws()) CHECK(parse_law(law_name(law)) == law);
  CHECK_FALSE(parse_law("nonsense"));
  CHECK(all_laws().size() == 10);
}

TEST_CASE("all laws hold on the fixed examples") {
  for (const auto& f : {ramp(), open_pulse(), closed_pulse(), tent(), zero()}) {
    for (double delta : {0.25, 1.0, 3.0}) {
      for (const auto& r : check_laws(f, delta, all_laws())) {
        INFO(law_name(r.law), " delta ", delta, ": ", r.detail);
        CHECK(r.passed);
      }
    }
  }
}

TEST_CASE("laws hold strictly on dyadic random functions") {
  testing::Rng rng(41);
  LawOptions opts;
  opts.tol = Tolerance(1e-9, 0.0);
  for (int i = 0; i < 40; ++i) {
    const auto f = testing::random_plf(rng, {40, true});
    const double delta = testing::random_delta(rng, f.domain().span());
    opts.seed = static_cast<std::uint64_t>(i);
    for (const auto& r : check_laws(f, delta, all_laws(), opts)) {
      INFO(law_name(r.law), ": ", r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("laws hold on non-dyadic grids with the default position slack") {
  testing::Rng rng(42);
  for (double h : {0.1, 0.3, 0.07}) {
    for (int i = 0; i < 15; ++i) {
      const auto f = grid_function(rng, h, 40);
      const double delta = h * (1 + i % 6);
      LawOptions opts;
      opts.seed = static_cast<std::uint64_t>(i);
      for (const auto& r : check_laws(f, delta, all_laws(), opts)) {
        INFO("h ", h, " delta ", delta, " ", law_name(r.law), ": ", r.detail);
        CHECK(r.passed);
      }
    }
  }
}

TEST_CASE("ordering reports each link of the chain") {
  const auto r = check_law(Law::Ordering, open_pulse(), 1);
  CHECK(r.passed);
  CHECK(r.checks == std::vector<std::string>{"L <= UL", "UL <= LU", "LU <= U"});
  CHECK(r.detail == "ok");
}

TEST_CASE("a broken smoother is caught") {
  LawOptions opts;
  opts.ops.L = [](const PiecewiseLinear& f, double delta) {
    return lower_envelope(f, delta / 2);
  };
  const auto results = check_laws(ramp(), 1, all_laws(), opts);
  const bool any_failed = std::any_of(results.begin(), results.end(),
                                      [](const LawResult& r) { return !r.passed; });
  CHECK(any_failed);
  CHECK_FALSE(check_law(Law::Idempotence, ramp(), 1, opts).passed);

  LawOptions swapped;
  swapped.ops.L = apply_U;
  swapped.ops.U = apply_L;
  CHECK_FALSE(check_law(Law::Bounding, open_pulse(), 1, swapped).passed);
}

TEST_CASE("the seed drives the randomized sub-cases deterministically") {
  LawOptions a, b;
  a.seed = b.seed = 7;
  const auto ra = check_law(Law::Semigroup, open_pulse(), 1, a);
  const auto rb = check_law(Law::Semigroup, open_pulse(), 1, b);
  CHECK(ra.checks == rb.checks);
}

TEST_CASE("comparisons with position slack") {
  const PiecewiseLinear a({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 1, 1}});
  const PiecewiseLinear b({{0, 0, 0, 0}, {1 + 1e-14, 0, 0, 1}, {2, 1, 1, 1}});
  CHECK(sup_distance(a, b) == 1);
  CHECK(distance_within(a, b, 1e-12) <= 1e-9);
  CHECK(distance_within(a, b, 0) == 1);
  CHECK(excess_within(a, b, 1e-12) <= 1e-9);
  CHECK(excess_within(ramp(), zero(), 1e-12) == doctest::Approx(4));
  CHECK_THROWS_AS(check_law(Law::Bounding, ramp(), 0), std::invalid_argument);
}
