#pragma once

#include <string>
#include <string_view>

#include "lulu/signal.hpp"

namespace lulu {

/// SVG 1.1 document with a fixed 800x400 viewBox: the input drawn dotted,
/// the smoothed output solid.  Jumps and isolated point values are drawn
/// exactly as vertical strokes.
std::string render_svg(const PiecewiseLinear& input,
                       const PiecewiseLinear& output,
                       std::string_view title = {});

/// CSV with columns x,input,output at `samples` evenly spaced points.
std::string sample_curves_csv(const PiecewiseLinear& input,
                              const PiecewiseLinear& output,
                              int samples = 1000);

}  // namespace lulu
