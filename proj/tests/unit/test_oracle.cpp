#include <doctest.h>

#include "fixtures.hpp"
#include "lulu/envelope.hpp"
#include "lulu/variation.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lulu;
using namespace lulu::fixtures;

TEST_CASE("grid envelope examples") {
  const auto c = PiecewiseLinear::constant(Domain(0, 1), 3);
  for (double step : {0.3, 0.01}) {
    for (double v : oracle::grid_envelope(c, 0.2, step, oracle::EnvelopeKind::Lower).value) {
      CHECK(v == 3);
    }
  }
  const auto g = oracle::grid_envelope(ramp(), 0.5, 0.25, oracle::EnvelopeKind::Lower);
  CHECK(g.x.size() == 17);
  for (std::size_t k = 0; k < g.x.size(); ++k) {
    CHECK(g.value[k] == doctest::Approx(std::max(g.x[k] - 0.5, 0.0)));
  }
  const auto p = oracle::grid_envelope(open_pulse(), 0.5, 1e-3, oracle::EnvelopeKind::Lower);
  for (double v : p.value) CHECK(v == 0);
  CHECK_THROWS_AS(oracle::grid_nodes(ramp(), 0), std::invalid_argument);
}

TEST_CASE("grid envelope converges downward as the step shrinks") {
  testing::Rng rng(61);
  const auto f = testing::random_plf(rng, {20, false});
  const auto coarse = oracle::grid_envelope(f, 0.3, 0.1, oracle::EnvelopeKind::Lower);
  const auto fine = oracle::grid_envelope(f, 0.3, 0.1 / 8, oracle::EnvelopeKind::Lower);
  const auto exact = lower_envelope(f, 0.3);
  for (std::size_t k = 0; k < coarse.x.size(); ++k) {
    const auto it = std::lower_bound(fine.x.begin(), fine.x.end(), coarse.x[k]);
    if (it == fine.x.end() || *it != coarse.x[k]) continue;
    const double v = fine.value[static_cast<std::size_t>(it - fine.x.begin())];
    CHECK(v <= coarse.value[k]);
    CHECK(exact(coarse.x[k]) <= v + 1e-12);
  }
}

TEST_CASE("grid TV") {
  const double extra[] = {0.3, 1.7, 2.2};
  CHECK(oracle::grid_tv(ramp(), {}) == doctest::Approx(4));
  CHECK(oracle::grid_tv(ramp(), extra) == doctest::Approx(4));
  const double near[] = {1 - 1e-6, 1 + 1e-6, 2 - 1e-6, 2 + 1e-6};
  CHECK(oracle::grid_tv(open_pulse(), near, false) == doctest::Approx(2).epsilon(1e-5));
  CHECK(oracle::grid_tv(open_pulse(), {}, true) == 2);
  // A jump whose point value sits between its limits, followed by a rising
  // segment: point values and midpoints alone under-count.
  const PiecewiseLinear dip({{0, 2, 2, 2}, {1, 2, 1, 0}, {2, 2, 2, 2}});
  CHECK(oracle::grid_tv(dip, {}, false) == 2);
  CHECK(oracle::grid_tv(dip, {}, true) == 4);
}

TEST_CASE("grid TV never exceeds the exact TV") {
  testing::Rng rng(62);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto f = testing::random_plf(rng, {30, true});
    std::vector<double> extra;
    for (int k = 0; k < 40; ++k) {
      extra.push_back(f.domain().lo() + f.domain().span() * u(rng));
    }
    const double exact = total_variation(f);
    CHECK(oracle::grid_tv(f, extra, false) <= exact + 1e-9);
    CHECK(oracle::grid_tv(f, extra, true) == doctest::Approx(exact));
  }
}

TEST_CASE("grid local monotonicity") {
  CHECK(oracle::grid_local_monotone(ramp(), 10, 0.01));
  CHECK_FALSE(oracle::grid_local_monotone(tent(), 0.5, 0.01));
  CHECK(oracle::grid_local_monotone(closed_pulse(), 0.9, 0.01));
  CHECK_FALSE(oracle::grid_local_monotone(closed_pulse(), 1.2, 0.01));
}

TEST_CASE("brute window scans") {
  const double v[] = {3, 1, 4, 1, 5};
  CHECK(oracle::brute_window_min(v, 0, 1) == std::vector<double>{1, 1, 1, 1, 5});
  CHECK(oracle::brute_window_max(v, 2, 0) == std::vector<double>{3, 3, 4, 4, 5});
}
