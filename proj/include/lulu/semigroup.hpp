#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lulu/signal.hpp"

namespace lulu {

enum class Letter { L, U };

/// A composition of L and U at one shared smoothing parameter.  The word is
/// read outermost-first: "LU" is L∘U, so U is applied first.
class OperatorExpr {
 public:
  OperatorExpr(std::vector<Letter> word, double delta);

  /// Parses a string over {L, U}; throws std::invalid_argument otherwise.
  static OperatorExpr parse(std::string_view word, double delta);

  const std::vector<Letter>& word() const { return word_; }
  double delta() const { return delta_; }
  std::string to_string() const;

 private:
  std::vector<Letter> word_;
  double delta_;
};

/// The four elements of the semigroup, listed in their pointwise order.
enum class CanonicalKind { L = 0, UL = 1, LU = 2, U = 3 };

struct CanonicalOperator {
  CanonicalKind kind;
  double delta;
};

std::string_view name(CanonicalKind k);

/// L_δ = S_{δ/2} ∘ I_{δ/2}: removes peaks narrower than δ.
PiecewiseLinear apply_L(const PiecewiseLinear& f, double delta);
/// U_δ = I_{δ/2} ∘ S_{δ/2}: removes pits narrower than δ.
PiecewiseLinear apply_U(const PiecewiseLinear& f, double delta);

/// Discrete L_n: windowed_min(fwd = n) followed by windowed_max(back = n).
DiscreteSignal apply_L_discrete(const DiscreteSignal& s, int n);
DiscreteSignal apply_U_discrete(const DiscreteSignal& s, int n);

/// Applies the letters right to left.
PiecewiseLinear apply_pipeline(const OperatorExpr& e, const PiecewiseLinear& f);
DiscreteSignal apply_pipeline_discrete(const std::vector<Letter>& word,
                                       const DiscreteSignal& s, int n);

PiecewiseLinear apply(const CanonicalOperator& op, const PiecewiseLinear& f);

/// outer ∘ inner, per the composition table.
CanonicalKind compose(CanonicalKind outer, CanonicalKind inner);

/// Symbolic reduction of the word to one of {L, U, UL, LU}.
CanonicalOperator canonicalize(const OperatorExpr& e);

/// Position in the chain L <= UL <= LU <= U.  Throws std::invalid_argument
/// when the deltas differ.
std::strong_ordering semigroup_compare(const CanonicalOperator& a,
                                       const CanonicalOperator& b);

}  // namespace lulu
