#pragma once

#include <cstddef>

#include "lulu/signal.hpp"

namespace lulu {

/// Lower r-envelope (flat erosion): x -> inf { f(y) : y in [x-r, x+r] ∩ Ω }.
/// Exact for the piecewise-linear class; the result is normalized.
PiecewiseLinear lower_envelope(const PiecewiseLinear& f, double r);

/// Upper r-envelope (flat dilation), the dual of lower_envelope.
PiecewiseLinear upper_envelope(const PiecewiseLinear& f, double r);

/// Lower semicontinuous regularization: every point value replaced by the
/// min of itself and its one-sided limits.
PiecewiseLinear lsc_regularization(const PiecewiseLinear& f);

/// Upper semicontinuous regularization (max instead of min).
PiecewiseLinear usc_regularization(const PiecewiseLinear& f);

/// out[i] = min s[j] over j in [i - back, i + fwd] clipped to valid indices.
/// Monotone-queue sweep, O(n) total.
DiscreteSignal windowed_min(const DiscreteSignal& s, std::size_t back,
                            std::size_t fwd);
DiscreteSignal windowed_max(const DiscreteSignal& s, std::size_t back,
                            std::size_t fwd);

}  // namespace lulu
