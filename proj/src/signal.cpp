#include "lulu/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lulu {

Domain::Domain(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("domain endpoints must be finite");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("domain requires lo < hi");
  }
}

Tolerance::Tolerance(double e, double pos) : eps(e), position(pos) {
  if (!(e >= 0.0) || !std::isfinite(e) || !(pos >= 0.0) || !std::isfinite(pos)) {
    throw std::invalid_argument("tolerance must be finite and nonnegative");
  }
}

double Tolerance::position_slack(const Domain& d) const {
  return position * std::max({1.0, std::abs(d.lo()), std::abs(d.hi())});
}

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) {
    throw std::invalid_argument("piecewise-linear function needs >= 2 nodes");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Breakpoint& b = nodes_[i];
    if (!std::isfinite(b.x) || !std::isfinite(b.value) ||
        !std::isfinite(b.left) || !std::isfinite(b.right)) {
      throw std::invalid_argument("non-finite breakpoint at index " +
                                  std::to_string(i));
    }
    if (i > 0 && !(nodes_[i - 1].x < b.x)) {
      throw std::invalid_argument(
          "breakpoint positions must be strictly increasing (index " +
          std::to_string(i) + ")");
    }
  }
  nodes_.front().left = nodes_.front().value;
  nodes_.back().right = nodes_.back().value;
}

PiecewiseLinear PiecewiseLinear::constant(const Domain& d, double c) {
  return PiecewiseLinear({{d.lo(), c, c, c}, {d.hi(), c, c, c}});
}

PiecewiseLinear PiecewiseLinear::continuous(std::span<const double> xs,
                                            std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("continuous: size mismatch");
  }
  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    nodes.push_back({xs[i], ys[i], ys[i], ys[i]});
  }
  return PiecewiseLinear(std::move(nodes));
}

double PiecewiseLinear::segment_value(std::size_t i, double y) const {
  const Breakpoint& a = nodes_[i];
  const Breakpoint& b = nodes_[i + 1];
  if (a.right == b.left) return a.right;
  if (y <= a.x) return a.right;
  if (y >= b.x) return b.left;
  const double t = (y - a.x) / (b.x - a.x);
  return (1.0 - t) * a.right + t * b.left;
}

double PiecewiseLinear::evaluate(double x, Side side) const {
  const Domain d = domain();
  if (!d.contains(x)) {
    throw std::domain_error("evaluate: x outside domain");
  }
  if (side == Side::LeftLimit && x == d.lo()) {
    throw std::invalid_argument("left limit undefined at the left endpoint");
  }
  if (side == Side::RightLimit && x == d.hi()) {
    throw std::invalid_argument("right limit undefined at the right endpoint");
  }
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), x,
      [](const Breakpoint& b, double v) { return b.x < v; });
  if (it != nodes_.end() && it->x == x) {
    switch (side) {
      case Side::At:
        return it->value;
      case Side::LeftLimit:
        return it->left;
      case Side::RightLimit:
        return it->right;
    }
  }
  const auto seg = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  return segment_value(seg, x);
}

double PiecewiseLinear::max_abs_slope() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double dx = nodes_[i + 1].x - nodes_[i].x;
    m = std::max(m, std::abs(nodes_[i + 1].left - nodes_[i].right) / dx);
  }
  return m;
}

namespace {

// Line through (x0, y0) and (x2, y2) passes through (x1, y1), up to a few
// ulps of the magnitudes involved.
bool collinear(double x0, double y0, double x1, double y1, double x2,
               double y2) {
  if (y0 == y1 && y1 == y2) return true;
  const double t = (x1 - x0) / (x2 - x0);
  const double predicted = (1.0 - t) * y0 + t * y2;
  const double scale = std::abs(y0) + std::abs(y1) + std::abs(y2);
  return std::abs(predicted - y1) <=
         16.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

PiecewiseLinear normalize(const PiecewiseLinear& f) {
  const auto in = f.nodes();
  std::vector<Breakpoint> out;
  out.reserve(in.size());
  out.push_back(in.front());
  for (std::size_t i = 1; i + 1 < in.size(); ++i) {
    const Breakpoint& b = in[i];
    const bool continuous = b.left == b.value && b.value == b.right;
    if (continuous) {
      const Breakpoint& prev = out.back();
      const Breakpoint& next = in[i + 1];
      if (collinear(prev.x, prev.right, b.x, b.value, next.x, next.left)) {
        continue;
      }
    }
    out.push_back(b);
  }
  out.push_back(in.back());
  return PiecewiseLinear(std::move(out));
}

std::vector<double> merged_positions(const PiecewiseLinear& f,
                                     const PiecewiseLinear& g) {
  if (!(f.domain() == g.domain())) {
    throw std::invalid_argument("functions live on different domains");
  }
  std::vector<double> xs;
  xs.reserve(f.size() + g.size());
  for (const auto& b : f.nodes()) xs.push_back(b.x);
  for (const auto& b : g.nodes()) xs.push_back(b.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

namespace {

template <typename Op>
PiecewiseLinear combine(const PiecewiseLinear& f, const PiecewiseLinear& g,
                        Op op) {
  const auto xs = merged_positions(f, g);
  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    Breakpoint b{x, 0.0, op(f.evaluate(x), g.evaluate(x)), 0.0};
    b.left = i == 0 ? b.value
                    : op(f.evaluate(x, Side::LeftLimit),
                         g.evaluate(x, Side::LeftLimit));
    b.right = i + 1 == xs.size() ? b.value
                                 : op(f.evaluate(x, Side::RightLimit),
                                      g.evaluate(x, Side::RightLimit));
    nodes.push_back(b);
  }
  return PiecewiseLinear(std::move(nodes));
}

template <typename Op>
PiecewiseLinear map_values(const PiecewiseLinear& f, Op op) {
  std::vector<Breakpoint> nodes(f.nodes().begin(), f.nodes().end());
  for (auto& b : nodes) {
    b.left = op(b.left);
    b.value = op(b.value);
    b.right = op(b.right);
  }
  return PiecewiseLinear(std::move(nodes));
}

}  // namespace

double max_excess(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  const auto xs = merged_positions(f, g);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    worst = std::max(worst, f.evaluate(x) - g.evaluate(x));
    if (i > 0) {
      worst = std::max(worst, f.evaluate(x, Side::LeftLimit) -
                                  g.evaluate(x, Side::LeftLimit));
    }
    if (i + 1 < xs.size()) {
      worst = std::max(worst, f.evaluate(x, Side::RightLimit) -
                                  g.evaluate(x, Side::RightLimit));
    }
  }
  return worst;
}

double sup_distance(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return std::max(0.0, std::max(max_excess(f, g), max_excess(g, f)));
}

PiecewiseLinear negate(const PiecewiseLinear& f) {
  return map_values(f, [](double v) { return -v; });
}

PiecewiseLinear scale(const PiecewiseLinear& f, double k) {
  return map_values(f, [k](double v) { return k * v; });
}

PiecewiseLinear add(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return combine(f, g, [](double a, double b) { return a + b; });
}

PiecewiseLinear subtract(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return combine(f, g, [](double a, double b) { return a - b; });
}

DiscreteSignal::DiscreteSignal(std::vector<double> values,
                               std::optional<double> spacing,
                               std::optional<double> origin)
    : values_(std::move(values)), spacing_(spacing), origin_(origin) {
  if (values_.empty()) {
    throw std::invalid_argument("discrete signal must be nonempty");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("discrete signal contains non-finite value");
    }
  }
  if (spacing_ && !(*spacing_ > 0.0 && std::isfinite(*spacing_))) {
    throw std::invalid_argument("spacing must be positive");
  }
  if (origin_ && !std::isfinite(*origin_)) {
    throw std::invalid_argument("origin must be finite");
  }
}

DiscreteSignal DiscreteSignal::with_values(std::vector<double> values) const {
  return DiscreteSignal(std::move(values), spacing_, origin_);
}

DiscreteSignal sample(const PiecewiseLinear& f, double h, double x0) {
  const Domain d = f.domain();
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("sample: spacing must be positive");
  }
  if (!d.contains(x0)) {
    throw std::invalid_argument("sample: origin outside domain");
  }
  // Absorb rounding in x0 + i*h landing a hair beyond hi.
  const double slack = 1e-12 * d.span();
  std::vector<double> values;
  for (std::size_t i = 0;; ++i) {
    double x = x0 + static_cast<double>(i) * h;
    if (x > d.hi() + slack) break;
    x = std::min(x, d.hi());
    values.push_back(f.evaluate(x));
  }
  return DiscreteSignal(std::move(values), h, x0);
}

PiecewiseLinear from_samples(const DiscreteSignal& s) {
  if (!s.spacing() || !s.origin()) {
    throw std::invalid_argument("from_samples: spacing and origin required");
  }
  if (s.size() < 2) {
    throw std::invalid_argument("from_samples: need at least two samples");
  }
  const double h = *s.spacing();
  const double x0 = *s.origin();
  std::vector<double> xs(s.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = x0 + static_cast<double>(i) * h;
  }
  return PiecewiseLinear::continuous(xs, s.values());
}

}  // namespace lulu
