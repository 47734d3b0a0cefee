#include <doctest.h>

#include "fixtures.hpp"
#include "lulu/semigroup.hpp"
#include "support/generators.hpp"

using namespace lulu;
using namespace lulu::fixtures;

namespace {

std::vector<double> values(const DiscreteSignal& s) {
  return {s.values().begin(), s.values().end()};
}

}  // namespace

TEST_CASE("continuous L and U examples") {
  const PiecewiseLinear min35({{0, 0, 0, 0}, {3.5, 3.5, 3.5, 3.5}, {4, 3.5, 3.5, 3.5}});
  const PiecewiseLinear max05({{0, 0.5, 0.5, 0.5}, {0.5, 0.5, 0.5, 0.5}, {4, 4, 4, 4}});
  CHECK(sup_distance(apply_L(ramp(), 1), min35) == 0);
  CHECK(sup_distance(apply_U(ramp(), 1), max05) == 0);
  CHECK(sup_distance(apply_L(open_pulse(), 1), zero()) == 0);
  CHECK(sup_distance(apply_L(closed_pulse(), 1), closed_pulse()) == 0);
  CHECK(sup_distance(apply_U(negate(open_pulse()), 1), zero()) == 0);
  const auto c = PiecewiseLinear::constant(Domain(0, 2), 1.25);
  CHECK(apply_L(c, 0.3) == c);
  CHECK(apply_U(c, 0.3) == c);
  CHECK_THROWS_AS(apply_L(ramp(), 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_U(ramp(), -2), std::invalid_argument);
}

TEST_CASE("a wider pulse survives L") {
  const PiecewiseLinear wide({{0, 0, 0, 0}, {1, 0, 0, 1}, {2.5, 1, 0, 0}, {4, 0, 0, 0}});
  const auto l = apply_L(wide, 1);
  CHECK(l(1.75) == 1);
  CHECK(sup_distance(l, wide) == 0);
}

TEST_CASE("discrete L and U examples") {
  const DiscreteSignal s({0, 0, 5, 0, 0});
  CHECK(values(apply_L_discrete(s, 1)) == std::vector<double>(5, 0));
  CHECK(apply_U_discrete(s, 1) == s);
  const DiscreteSignal c({2, 2, 2, 2});
  for (int n = 1; n < 6; ++n) {
    CHECK(apply_L_discrete(c, n) == c);
    CHECK(apply_U_discrete(c, n) == c);
  }
  CHECK(values(apply_U_discrete(DiscreteSignal({0, 0, -5, 0, 0}), 1)) ==
        std::vector<double>(5, 0));
  // Width-2 peak needs n = 2.
  const DiscreteSignal two({0, 0, 5, 5, 0, 0});
  CHECK(apply_L_discrete(two, 1) == two);
  CHECK(values(apply_L_discrete(two, 2)) == std::vector<double>(6, 0));
  CHECK_THROWS_AS(apply_L_discrete(s, 0), std::invalid_argument);
}

TEST_CASE("operator expressions") {
  const auto e = OperatorExpr::parse("LU", 1);
  CHECK(e.to_string() == "LU");
  CHECK(e.delta() == 1);
  CHECK(sup_distance(apply_pipeline(e, open_pulse()),
                     apply_L(apply_U(open_pulse(), 1), 1)) == 0);
  CHECK(apply_pipeline(OperatorExpr::parse("L", 1), ramp()) == apply_L(ramp(), 1));
  CHECK_THROWS_AS(OperatorExpr::parse("LXU", 1), std::invalid_argument);
  CHECK_THROWS_AS(OperatorExpr::parse("", 1), std::invalid_argument);
  CHECK_THROWS_AS(OperatorExpr::parse("L", 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_pipeline_discrete({}, DiscreteSignal({1}), 1),
                  std::invalid_argument);
}

TEST_CASE("canonicalize") {
  auto kind = [](const char* w) { return canonicalize(OperatorExpr::parse(w, 1)).kind; };
  CHECK(kind("L") == CanonicalKind::L);
  CHECK(kind("U") == CanonicalKind::U);
  CHECK(kind("LL") == CanonicalKind::L);
  CHECK(kind("UU") == CanonicalKind::U);
  CHECK(kind("ULU") == CanonicalKind::LU);
  CHECK(kind("LUL") == CanonicalKind::UL);
  CHECK(kind("LU") == CanonicalKind::LU);
  CHECK(kind("UL") == CanonicalKind::UL);
  CHECK(kind("ULULUL") == CanonicalKind::UL);
  CHECK(kind("LULULU") == CanonicalKind::LU);
  CHECK(canonicalize(OperatorExpr::parse("LL", 0.5)).delta == 0.5);
}

TEST_CASE("canonical words evaluate like their source words") {
  testing::Rng rng(21);
  const char* words[] = {"ULU", "LUL", "LLU", "UUL", "ULUL", "LULU", "UULL"};
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::random_plf(rng, {25, true});
    const double delta = testing::random_delta(rng, f.domain().span());
    for (const char* w : words) {
      const auto e = OperatorExpr::parse(w, delta);
      CHECK(sup_distance(apply_pipeline(e, f), apply(canonicalize(e), f)) <= 1e-9);
    }
  }
}

TEST_CASE("composition table agrees with discrete evaluation") {
  const CanonicalKind kinds[] = {CanonicalKind::L, CanonicalKind::UL,
                                 CanonicalKind::LU, CanonicalKind::U};
  auto word = [](CanonicalKind k) -> std::vector<Letter> {
    switch (k) {
      case CanonicalKind::L: return {Letter::L};
      case CanonicalKind::UL: return {Letter::U, Letter::L};
      case CanonicalKind::LU: return {Letter::L, Letter::U};
      case CanonicalKind::U: return {Letter::U};
    }
    return {};
  };
  testing::Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_signal(rng, 40);
    for (auto a : kinds) {
      for (auto b : kinds) {
        auto w = word(a);
        const auto inner = word(b);
        w.insert(w.end(), inner.begin(), inner.end());
        CHECK(apply_pipeline_discrete(w, s, 2) ==
              apply_pipeline_discrete(word(compose(a, b)), s, 2));
      }
    }
  }
}

TEST_CASE("semigroup order") {
  auto op = [](CanonicalKind k) { return CanonicalOperator{k, 1}; };
  CHECK(semigroup_compare(op(CanonicalKind::L), op(CanonicalKind::U)) < 0);
  CHECK(semigroup_compare(op(CanonicalKind::UL), op(CanonicalKind::LU)) < 0);
  CHECK(semigroup_compare(op(CanonicalKind::LU), op(CanonicalKind::LU)) == 0);
  CHECK(semigroup_compare(op(CanonicalKind::U), op(CanonicalKind::UL)) > 0);
  CHECK_THROWS_AS(semigroup_compare(op(CanonicalKind::L),
                                    CanonicalOperator{CanonicalKind::U, 2}),
                  std::invalid_argument);
  CHECK(name(CanonicalKind::UL) == "UL");
}
