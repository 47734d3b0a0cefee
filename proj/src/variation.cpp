#include "lulu/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lulu {

namespace {

// A value of f seen from one side of a position: offset -1 stands for points
// just left of pos (a left limit), +1 for points just right, 0 for pos
// itself.  Consecutive atoms at different positions bound an open segment
// on which f is linear.
struct Atom {
  double pos;
  int off;
  double val;
};

std::vector<Atom> atoms_of(const PiecewiseLinear& f) {
  std::vector<Atom> atoms;
  const auto nodes = f.nodes();
  atoms.reserve(3 * nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) atoms.push_back({nodes[i].x, -1, nodes[i].left});
    atoms.push_back({nodes[i].x, 0, nodes[i].value});
    if (i + 1 < nodes.size()) atoms.push_back({nodes[i].x, 1, nodes[i].right});
  }
  return atoms;
}

std::vector<Atom> atoms_on(const PiecewiseLinear& f, double x1, double x2) {
  std::vector<Atom> atoms;
  atoms.push_back({x1, 0, f.evaluate(x1)});
  if (x1 == x2) return atoms;
  atoms.push_back({x1, 1, f.evaluate(x1, Side::RightLimit)});
  for (const auto& b : f.nodes()) {
    if (b.x <= x1 || b.x >= x2) continue;
    atoms.push_back({b.x, -1, b.left});
    atoms.push_back({b.x, 0, b.value});
    atoms.push_back({b.x, 1, b.right});
  }
  atoms.push_back({x2, -1, f.evaluate(x2, Side::LeftLimit)});
  atoms.push_back({x2, 0, f.evaluate(x2)});
  return atoms;
}

// Nearest point left of atoms[b] where f < threshold, not looking further
// than `floor`.
std::optional<Atom> nearest_below_left(const std::vector<Atom>& atoms,
                                       std::size_t b, double threshold,
                                       double floor) {
  for (std::size_t j = b; j-- > 0;) {
    const Atom& lo = atoms[j];
    const Atom& hi = atoms[j + 1];
    if (hi.pos < floor) return std::nullopt;
    if (lo.pos < hi.pos && lo.val < threshold && hi.val >= threshold) {
      const double c =
          lo.pos + (hi.pos - lo.pos) * (threshold - lo.val) / (hi.val - lo.val);
      return Atom{c, -1, threshold};
    }
    if (lo.pos < floor) return std::nullopt;
    if (lo.val < threshold) return lo;
  }
  return std::nullopt;
}

std::optional<Atom> nearest_below_right(const std::vector<Atom>& atoms,
                                        std::size_t b, double threshold,
                                        double ceiling) {
  for (std::size_t j = b + 1; j < atoms.size(); ++j) {
    const Atom& lo = atoms[j - 1];
    const Atom& hi = atoms[j];
    if (lo.pos > ceiling) return std::nullopt;
    if (lo.pos < hi.pos && hi.val < threshold && lo.val >= threshold) {
      const double c =
          lo.pos + (hi.pos - lo.pos) * (lo.val - threshold) / (lo.val - hi.val);
      return Atom{c, 1, threshold};
    }
    if (hi.pos > ceiling) return std::nullopt;
    if (hi.val < threshold) return hi;
  }
  return std::nullopt;
}

struct PeakViolation {
  Atom left;
  Atom peak;
  Atom right;
};

// A peak atom with strictly lower (by more than eps) points on both sides
// inside a closed window of length delta.  Spans within `slack` of delta are
// treated as exactly delta.
std::optional<PeakViolation> find_peak(const std::vector<Atom>& atoms,
                                       double delta, double eps, double slack) {
  for (std::size_t b = 0; b < atoms.size(); ++b) {
    const Atom& z = atoms[b];
    const double threshold = z.val - eps;
    const auto x =
        nearest_below_left(atoms, b, threshold, z.pos - delta - slack);
    if (!x) continue;
    const auto y =
        nearest_below_right(atoms, b, threshold, x->pos + delta + slack);
    if (!y) continue;
    const double span = y->pos - x->pos;
    const bool at_delta = std::abs(span - delta) <= slack;
    if ((span < delta && !at_delta) || (at_delta && y->off - x->off <= 0)) {
      return PeakViolation{*x, z, *y};
    }
  }
  return std::nullopt;
}

WitnessInterval make_witness(const PiecewiseLinear& f, const PeakViolation& v,
                             double delta) {
  const Domain d = f.domain();
  double shortest = d.span();
  for (std::size_t i = 0; i < f.segments(); ++i) {
    shortest = std::min(shortest, f[i + 1].x - f[i].x);
  }
  double eps = 1e-3 * std::min(shortest, delta);
  const double span = v.right.pos - v.left.pos;
  if (span < delta) eps = std::min(eps, (delta - span) / 4);
  auto place = [&](const Atom& a, double scale) {
    return std::clamp(a.pos + a.off * eps * scale, d.lo(), d.hi());
  };
  const double x = place(v.left, 1.0);
  const double z = place(v.peak, 0.5);
  const double y = place(v.right, 1.0);
  return WitnessInterval{x, y, {x, z, y}};
}

std::vector<Atom> negated(std::vector<Atom> atoms) {
  for (auto& a : atoms) a.val = -a.val;
  return atoms;
}

// First pair (earlier, later) breaking monotonicity in the given direction.
std::optional<std::pair<Atom, Atom>> monotone_break(
    const std::vector<Atom>& atoms, bool increasing, double eps) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < atoms.size(); ++j) {
    const double sign = increasing ? 1.0 : -1.0;
    if (sign * atoms[j].val < sign * atoms[best].val - eps) {
      return std::pair{atoms[best], atoms[j]};
    }
    if (sign * atoms[j].val > sign * atoms[best].val) best = j;
  }
  return std::nullopt;
}

double place_inside(const Atom& a, double x1, double x2) {
  const double eps = 1e-9 * (x2 - x1);
  return std::clamp(a.pos + a.off * eps, x1, x2);
}

}  // namespace

Operator as_operator(const OperatorExpr& e) {
  return [e](const PiecewiseLinear& f) { return apply_pipeline(e, f); };
}

double total_variation(const PiecewiseLinear& f) {
  const auto nodes = f.nodes();
  double tv = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) {
      tv += std::abs(nodes[i].value - nodes[i].left);
      tv += std::abs(nodes[i].left - nodes[i - 1].right);
    }
    if (i + 1 < nodes.size()) tv += std::abs(nodes[i].right - nodes[i].value);
  }
  return tv;
}

double total_variation(const DiscreteSignal& s) {
  const auto v = s.values();
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

Trend trend_on(const PiecewiseLinear& f, double x1, double x2, Tolerance tol) {
  if (!(x1 <= x2)) throw std::invalid_argument("trend_on: x1 > x2");
  const auto atoms = atoms_on(f, x1, x2);
  const bool inc = !monotone_break(atoms, true, tol.eps);
  const bool dec = !monotone_break(atoms, false, tol.eps);
  if (inc && dec) return Trend::Constant;
  if (inc) return Trend::Increasing;
  if (dec) return Trend::Decreasing;
  return Trend::None;
}

MonotonicityVerdict is_locally_delta_monotone(const PiecewiseLinear& f,
                                              double delta, Tolerance tol) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("is_locally_delta_monotone: delta must be > 0");
  }
  const auto atoms = atoms_of(f);
  const double slack = tol.position_slack(f.domain());
  auto v = find_peak(atoms, delta, tol.eps, slack);
  if (!v) v = find_peak(negated(atoms), delta, tol.eps, slack);
  if (!v) return {};
  return {false, make_witness(f, *v, delta)};
}

NMonotoneVerdict is_n_monotone(const DiscreteSignal& s, int n, double eps) {
  if (n < 1) throw std::invalid_argument("is_n_monotone: n must be >= 1");
  const auto v = s.values();
  const std::size_t width = static_cast<std::size_t>(n) + 2;
  const std::size_t windows = v.size() > width ? v.size() - width + 1 : 1;
  for (std::size_t i = 0; i < windows; ++i) {
    const std::size_t end = std::min(v.size(), i + width);
    std::vector<Atom> window;
    for (std::size_t j = i; j < end; ++j) {
      window.push_back({static_cast<double>(j), 0, v[j]});
    }
    if (monotone_break(window, true, eps) && monotone_break(window, false, eps)) {
      return {false, i};
    }
  }
  return {};
}

MonotonicityVerdict check_trend_preservation(const PiecewiseLinear& f,
                                             const Operator& op, double x1,
                                             double x2, Tolerance tol) {
  const Domain d = f.domain();
  if (!d.contains(x1) || !d.contains(x2) || !(x1 < x2)) {
    throw std::invalid_argument("trend check needs lo <= x1 < x2 <= hi");
  }
  const Trend t = trend_on(f, x1, x2, tol);
  if (t == Trend::None) {
    throw std::invalid_argument("f is not monotone on the interval");
  }
  const PiecewiseLinear smooth = op(f);
  const PiecewiseLinear residual = subtract(f, smooth);
  for (const PiecewiseLinear* g : {&smooth, &residual}) {
    const auto atoms = atoms_on(*g, x1, x2);
    for (bool increasing : {true, false}) {
      if (increasing && t == Trend::Decreasing) continue;
      if (!increasing && t == Trend::Increasing) continue;
      if (auto br = monotone_break(atoms, increasing, tol.eps)) {
        const double a = place_inside(br->first, x1, x2);
        const double b = place_inside(br->second, x1, x2);
        return {false, WitnessInterval{x1, x2, {a, b}}};
      }
    }
  }
  return {};
}

MonotonicityVerdict check_trend_preservation(const PiecewiseLinear& f,
                                             const OperatorExpr& e, double x1,
                                             double x2, Tolerance tol) {
  return check_trend_preservation(f, as_operator(e), x1, x2, tol);
}

Decomposition decompose(const PiecewiseLinear& f, const Operator& op) {
  PiecewiseLinear smooth = op(f);
  PiecewiseLinear residual = subtract(f, smooth);
  TVDecompositionReport r;
  r.tv_f = total_variation(f);
  r.tv_smooth = total_variation(smooth);
  r.tv_residual = total_variation(residual);
  r.defect = r.tv_smooth + r.tv_residual - r.tv_f;
  return {std::move(smooth), std::move(residual), r};
}

TVDecompositionReport tv_decomposition(const PiecewiseLinear& f,
                                       const OperatorExpr& e) {
  return decompose(f, as_operator(e)).report;
}

TVDecompositionReport tv_decomposition(const PiecewiseLinear& f,
                                       const Operator& op) {
  return decompose(f, op).report;
}

DiscreteDecomposition decompose_discrete(const DiscreteSignal& s,
                                         const std::vector<Letter>& word,
                                         int n) {
  DiscreteSignal smooth = apply_pipeline_discrete(word, s, n);
  std::vector<double> res(s.size());
  for (std::size_t i = 0; i < res.size(); ++i) res[i] = s[i] - smooth[i];
  DiscreteSignal residual = s.with_values(std::move(res));
  TVDecompositionReport r;
  r.tv_f = total_variation(s);
  r.tv_smooth = total_variation(smooth);
  r.tv_residual = total_variation(residual);
  r.defect = r.tv_smooth + r.tv_residual - r.tv_f;
  return {std::move(smooth), std::move(residual), r};
}

std::vector<std::pair<double, double>> monotone_runs(const PiecewiseLinear& f,
                                                     Tolerance tol) {
  std::vector<std::pair<double, double>> runs;
  const auto nodes = f.nodes();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    std::size_t j = i + 1;
    while (j < nodes.size() &&
           trend_on(f, nodes[i].x, nodes[j].x, tol) != Trend::None) {
      ++j;
    }
    if (j - 1 > i) {
      runs.emplace_back(nodes[i].x, nodes[j - 1].x);
    } else {
      const double q = (nodes[i + 1].x - nodes[i].x) / 4;
      runs.emplace_back(nodes[i].x + q, nodes[i + 1].x - q);
    }
  }
  return runs;
}

SamplingBridgeReport verify_sampling_bridge(const PiecewiseLinear& f,
                                            double delta, int n, double h,
                                            double x0, Tolerance tol) {
  if (n < 1) throw std::invalid_argument("sampling bridge: n must be >= 1");
  if (!(h > 0.0) || !(h < delta / (n + 1))) {
    throw std::invalid_argument("sampling bridge: need 0 < h < delta/(n+1)");
  }
  if (!is_locally_delta_monotone(f, delta, tol)) {
    throw std::invalid_argument(
        "sampling bridge: f is not locally delta-monotone");
  }
  SamplingBridgeReport r;
  const DiscreteSignal s = sample(f, h, x0);
  const auto verdict = is_n_monotone(s, n, tol.eps);
  r.n_monotone = verdict.holds;
  r.witness_index = verdict.witness_index;
  r.tv_sample = total_variation(s);
  r.tv_function = total_variation(f);
  for (std::size_t i = 0; i < r.tv_refinements.size(); ++i) {
    r.tv_refinements[i] = total_variation(sample(f, h / std::ldexp(1.0, i), x0));
  }
  r.tv_bounded = r.tv_sample <= r.tv_function + tol.eps;
  r.refinements_nondecreasing =
      r.tv_refinements[0] <= r.tv_refinements[1] + tol.eps &&
      r.tv_refinements[1] <= r.tv_refinements[2] + tol.eps &&
      r.tv_refinements[2] <= r.tv_function + tol.eps;
  return r;
}

}  // namespace lulu
