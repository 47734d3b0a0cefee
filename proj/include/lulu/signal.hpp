#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lulu {

/// Closed bounded interval [lo, hi] with lo < hi.
class Domain {
 public:
  Domain(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double span() const { return hi_ - lo_; }
  bool contains(double x) const { return x >= lo_ && x <= hi_; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  double lo_;
  double hi_;
};

/// Comparison tolerance used by the law checks.  `eps` is absolute, in
/// function values.  `position` is a horizontal slack relative to the size
/// of the domain coordinates: node positions reached through different
/// rounding routes (x + a + b versus x + (a + b)) may differ by a few ulps,
/// and a jump shifted by one ulp would otherwise count as a full violation.
/// Set it to 0 for strict pointwise comparison.
struct Tolerance {
  double eps = 1e-9;
  double position = 1e-12;

  Tolerance() = default;
  explicit Tolerance(double e, double pos = 1e-12);

  /// Absolute horizontal slack on domain d.
  double position_slack(const Domain& d) const;
};

/// One node of a piecewise-linear function.  `left` is the limit from the
/// segment ending here, `right` the limit entering the following segment.
/// On the first node `left` mirrors `value`; on the last, `right` does.
struct Breakpoint {
  double x = 0.0;
  double left = 0.0;
  double value = 0.0;
  double right = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

enum class Side { At, LeftLimit, RightLimit };

/// Bounded function on a closed interval, linear on each open segment
/// between breakpoints, with arbitrary point values and one-sided limits at
/// the breakpoints (jumps and isolated point values allowed).
class PiecewiseLinear {
 public:
  /// Validates and stores the nodes.  The domain is [nodes.front().x,
  /// nodes.back().x].  Throws std::invalid_argument on malformed input.
  explicit PiecewiseLinear(std::vector<Breakpoint> nodes);

  static PiecewiseLinear constant(const Domain& d, double c);
  /// Continuous interpolant through (xs[i], ys[i]).
  static PiecewiseLinear continuous(std::span<const double> xs,
                                    std::span<const double> ys);

  Domain domain() const { return Domain(nodes_.front().x, nodes_.back().x); }
  std::span<const Breakpoint> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t segments() const { return nodes_.size() - 1; }
  const Breakpoint& operator[](std::size_t i) const { return nodes_[i]; }

  double evaluate(double x, Side side = Side::At) const;
  double operator()(double x) const { return evaluate(x); }

  /// Value of the straight line on segment i at y (y clamped to the segment).
  double segment_value(std::size_t i, double y) const;

  double max_abs_slope() const;

  friend bool operator==(const PiecewiseLinear&,
                         const PiecewiseLinear&) = default;

 private:
  std::vector<Breakpoint> nodes_;
};

using Plf = PiecewiseLinear;

/// Canonical form: drops interior breakpoints that carry no jump and sit on
/// the line through their neighbours.
PiecewiseLinear normalize(const PiecewiseLinear& f);

/// Sup of |f - g| over the domain.  Exact for the class: f - g is linear on
/// every cell of the merged breakpoint set.
double sup_distance(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Sup of (f - g).  f <= g within eps iff max_excess(f, g) <= eps.
double max_excess(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Merged sorted unique breakpoint positions of f and g (same domain).
std::vector<double> merged_positions(const PiecewiseLinear& f,
                                     const PiecewiseLinear& g);

PiecewiseLinear negate(const PiecewiseLinear& f);
PiecewiseLinear scale(const PiecewiseLinear& f, double k);
PiecewiseLinear add(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear subtract(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Finite sequence of samples, optionally tagged with uniform spacing and
/// origin.
class DiscreteSignal {
 public:
  explicit DiscreteSignal(std::vector<double> values,
                          std::optional<double> spacing = std::nullopt,
                          std::optional<double> origin = std::nullopt);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::optional<double> spacing() const { return spacing_; }
  std::optional<double> origin() const { return origin_; }

  /// Same metadata, new values.
  DiscreteSignal with_values(std::vector<double> values) const;

  friend bool operator==(const DiscreteSignal&,
                         const DiscreteSignal&) = default;

 private:
  std::vector<double> values_;
  std::optional<double> spacing_;
  std::optional<double> origin_;
};

/// f(x0 + i*h) for every i >= 0 with x0 + i*h <= hi.
DiscreteSignal sample(const PiecewiseLinear& f, double h, double x0);

/// Continuous interpolant through (x0 + i*h, s[i]).
PiecewiseLinear from_samples(const DiscreteSignal& s);

}  // namespace lulu
