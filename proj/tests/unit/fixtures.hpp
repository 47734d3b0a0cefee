#pragma once

#include "lulu/signal.hpp"

namespace lulu::fixtures {

inline PiecewiseLinear ramp() {  // x on [0, 4]
  return PiecewiseLinear({{0, 0, 0, 0}, {4, 4, 4, 4}});
}

// 1 on the open interval (1, 2), 0 elsewhere including both endpoints.
inline PiecewiseLinear open_pulse() {
  return PiecewiseLinear({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 0, 0}, {4, 0, 0, 0}});
}

// 1 on the closed interval [1, 2].
inline PiecewiseLinear closed_pulse() {
  return PiecewiseLinear({{0, 0, 0, 0}, {1, 0, 1, 1}, {2, 1, 1, 0}, {4, 0, 0, 0}});
}

inline PiecewiseLinear zero(double lo = 0, double hi = 4) {
  return PiecewiseLinear::constant(Domain(lo, hi), 0.0);
}

// Up 0.2 then down 0.2, apex at x = 1.
inline PiecewiseLinear tent() {
  return PiecewiseLinear({{0, 0, 0, 0}, {0.8, 0, 0, 0}, {1, 1, 1, 1},
                          {1.2, 0, 0, 0}, {2, 0, 0, 0}});
}

}  // namespace lulu::fixtures
