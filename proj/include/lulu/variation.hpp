#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lulu/semigroup.hpp"
#include "lulu/signal.hpp"

namespace lulu {

/// Any map on piecewise-linear functions; used for fixtures that are not
/// LULU compositions.
using Operator = std::function<PiecewiseLinear(const PiecewiseLinear&)>;

Operator as_operator(const OperatorExpr& e);

struct WitnessInterval {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> sample_points;
};

struct MonotonicityVerdict {
  bool holds = true;
  std::optional<WitnessInterval> witness;
  explicit operator bool() const { return holds; }
};

struct NMonotoneVerdict {
  bool holds = true;
  std::optional<std::size_t> witness_index;
  explicit operator bool() const { return holds; }
};

struct TVDecompositionReport {
  double tv_f = 0.0;
  double tv_smooth = 0.0;
  double tv_residual = 0.0;
  double defect = 0.0;
};

struct SamplingBridgeReport {
  bool n_monotone = false;
  std::optional<std::size_t> witness_index;
  double tv_sample = 0.0;
  double tv_function = 0.0;
  /// TV of the samplings at h, h/2, h/4 from the same origin.
  std::array<double, 3> tv_refinements{};
  bool tv_bounded = false;
  bool refinements_nondecreasing = false;
};

enum class Trend { Increasing, Decreasing, Constant, None };

/// Exact TV for the class: every jump contributes |v - l| + |r - v| and every
/// segment |l_{i+1} - r_i|.
double total_variation(const PiecewiseLinear& f);
double total_variation(const DiscreteSignal& s);

/// Direction in which f is monotone on [x1, x2], within eps.
Trend trend_on(const PiecewiseLinear& f, double x1, double x2,
               Tolerance tol = {});

/// True iff f is monotone on every closed subinterval of length <= delta.
/// Violations no taller than tol.eps are ignored.
MonotonicityVerdict is_locally_delta_monotone(const PiecewiseLinear& f,
                                              double delta,
                                              Tolerance tol = {});

/// True iff every n + 2 consecutive terms are monotone (the whole sequence
/// when it is shorter than n + 2).  The witness is the first failing start.
NMonotoneVerdict is_n_monotone(const DiscreteSignal& s, int n,
                               double eps = 0.0);

/// For f monotone on [x1, x2]: checks that A(f) and f - A(f) are monotone in
/// the same direction there.  Throws std::invalid_argument when f itself is
/// not monotone on the interval.
MonotonicityVerdict check_trend_preservation(const PiecewiseLinear& f,
                                             const Operator& op, double x1,
                                             double x2, Tolerance tol = {});
MonotonicityVerdict check_trend_preservation(const PiecewiseLinear& f,
                                             const OperatorExpr& e, double x1,
                                             double x2, Tolerance tol = {});

/// Smooth/residual split produced by an operator, with the three TVs.
struct Decomposition {
  PiecewiseLinear smooth;
  PiecewiseLinear residual;
  TVDecompositionReport report;
};

Decomposition decompose(const PiecewiseLinear& f, const Operator& op);
TVDecompositionReport tv_decomposition(const PiecewiseLinear& f,
                                       const OperatorExpr& e);
TVDecompositionReport tv_decomposition(const PiecewiseLinear& f,
                                       const Operator& op);

struct DiscreteDecomposition {
  DiscreteSignal smooth;
  DiscreteSignal residual;
  TVDecompositionReport report;
};

DiscreteDecomposition decompose_discrete(const DiscreteSignal& s,
                                         const std::vector<Letter>& word,
                                         int n);

/// Closed intervals on which f is monotone: for each breakpoint, the longest
/// run of whole segments starting there, or the inner half of the segment
/// when even one segment is not monotone (isolated point values).
std::vector<std::pair<double, double>> monotone_runs(const PiecewiseLinear& f,
                                                     Tolerance tol = {});

/// Samples a locally delta-monotone f at spacing h < delta / (n + 1) and
/// reports n-monotonicity and total variation of the samples.  Throws
/// std::invalid_argument when either precondition fails.
SamplingBridgeReport verify_sampling_bridge(const PiecewiseLinear& f,
                                            double delta, int n, double h,
                                            double x0, Tolerance tol = {});

}  // namespace lulu
