#include "lulu/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lulu/envelope.hpp"

namespace lulu {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be positive and finite");
  }
}

void require_width(int n) {
  if (n < 1) throw std::invalid_argument("discrete width n must be >= 1");
}

// S_r(I_r f) and I_r(S_r f) put some nodes at (x_i - r) + r, which rounding
// can leave an ulp away from x_i.  Moving those back keeps point values of f
// aligned with the output, which the residual f - A(f) depends on.
PiecewiseLinear snap_to_nodes(const PiecewiseLinear& g,
                              const PiecewiseLinear& anchor, double r) {
  const Domain d = anchor.domain();
  const double scale = std::max({std::abs(d.lo()), std::abs(d.hi()), r});
  const double gap = 16 * std::numeric_limits<double>::epsilon() * scale;
  std::vector<double> xs;
  xs.reserve(anchor.size());
  for (const Breakpoint& b : anchor.nodes()) xs.push_back(b.x);

  std::vector<Breakpoint> out;
  std::vector<double> offset;  // distance moved, to settle collisions
  bool moved = false;
  for (Breakpoint b : g.nodes()) {
    const auto it = std::lower_bound(xs.begin(), xs.end(), b.x);
    double target = b.x;
    if (it != xs.end() && *it - b.x <= gap) target = *it;
    if (it != xs.begin() && b.x - *(it - 1) <= gap &&
        (target == b.x || b.x - *(it - 1) < target - b.x)) {
      target = *(it - 1);
    }
    const double dist = std::abs(target - b.x);
    moved = moved || dist > 0.0;
    b.x = target;
    if (!out.empty() && out.back().x == b.x) {
      // Two nodes on one anchor: keep the outer limits and the point value
      // of whichever sat closer.
      if (dist < offset.back()) {
        out.back().value = b.value;
        offset.back() = dist;
      }
      out.back().right = b.right;
      continue;
    }
    out.push_back(b);
    offset.push_back(dist);
  }
  if (!moved) return g;
  out.front().left = out.front().value;
  out.back().right = out.back().value;
  return normalize(PiecewiseLinear(std::move(out)));
}

}  // namespace

OperatorExpr::OperatorExpr(std::vector<Letter> word, double delta)
    : word_(std::move(word)), delta_(delta) {
  if (word_.empty()) throw std::invalid_argument("operator word is empty");
  require_delta(delta);
}

OperatorExpr OperatorExpr::parse(std::string_view word, double delta) {
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (char c : word) {
    switch (c) {
      case 'L':
        letters.push_back(Letter::L);
        break;
      case 'U':
        letters.push_back(Letter::U);
        break;
      default:
        throw std::invalid_argument("operator word may only contain L and U");
    }
  }
  return OperatorExpr(std::move(letters), delta);
}

std::string OperatorExpr::to_string() const {
  std::string s;
  for (Letter l : word_) s.push_back(l == Letter::L ? 'L' : 'U');
  return s;
}

std::string_view name(CanonicalKind k) {
  switch (k) {
    case CanonicalKind::L:
      return "L";
    case CanonicalKind::UL:
      return "UL";
    case CanonicalKind::LU:
      return "LU";
    case CanonicalKind::U:
      return "U";
  }
  return "?";
}

PiecewiseLinear apply_L(const PiecewiseLinear& f, double delta) {
  require_delta(delta);
  return snap_to_nodes(upper_envelope(lower_envelope(f, delta / 2), delta / 2),
                       f, delta / 2);
}

PiecewiseLinear apply_U(const PiecewiseLinear& f, double delta) {
  require_delta(delta);
  return snap_to_nodes(lower_envelope(upper_envelope(f, delta / 2), delta / 2),
                       f, delta / 2);
}

DiscreteSignal apply_L_discrete(const DiscreteSignal& s, int n) {
  require_width(n);
  const auto w = static_cast<std::size_t>(n);
  return windowed_max(windowed_min(s, 0, w), w, 0);
}

DiscreteSignal apply_U_discrete(const DiscreteSignal& s, int n) {
  require_width(n);
  const auto w = static_cast<std::size_t>(n);
  return windowed_min(windowed_max(s, 0, w), w, 0);
}

PiecewiseLinear apply_pipeline(const OperatorExpr& e, const PiecewiseLinear& f) {
  PiecewiseLinear g = f;
  const auto& word = e.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = *it == Letter::L ? apply_L(g, e.delta()) : apply_U(g, e.delta());
  }
  return g;
}

DiscreteSignal apply_pipeline_discrete(const std::vector<Letter>& word,
                                       const DiscreteSignal& s, int n) {
  if (word.empty()) throw std::invalid_argument("operator word is empty");
  DiscreteSignal g = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = *it == Letter::L ? apply_L_discrete(g, n) : apply_U_discrete(g, n);
  }
  return g;
}

PiecewiseLinear apply(const CanonicalOperator& op, const PiecewiseLinear& f) {
  switch (op.kind) {
    case CanonicalKind::L:
      return apply_L(f, op.delta);
    case CanonicalKind::U:
      return apply_U(f, op.delta);
    case CanonicalKind::UL:
      return apply_U(apply_L(f, op.delta), op.delta);
    case CanonicalKind::LU:
      return apply_L(apply_U(f, op.delta), op.delta);
  }
  throw std::logic_error("unreachable canonical kind");
}

CanonicalKind compose(CanonicalKind outer, CanonicalKind inner) {
  using K = CanonicalKind;
  // Rows: outer in {L, UL, LU, U}; columns: inner in the same order.
  static constexpr K table[4][4] = {
      /* L  */ {K::L, K::UL, K::LU, K::LU},
      /* UL */ {K::UL, K::UL, K::LU, K::LU},
      /* LU */ {K::UL, K::UL, K::LU, K::LU},
      /* U  */ {K::UL, K::UL, K::LU, K::U},
  };
  return table[static_cast<int>(outer)][static_cast<int>(inner)];
}

CanonicalOperator canonicalize(const OperatorExpr& e) {
  const auto& word = e.word();
  auto as_kind = [](Letter l) {
    return l == Letter::L ? CanonicalKind::L : CanonicalKind::U;
  };
  CanonicalKind acc = as_kind(word.back());
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) {
    acc = compose(as_kind(*it), acc);
  }
  return {acc, e.delta()};
}

std::strong_ordering semigroup_compare(const CanonicalOperator& a,
                                       const CanonicalOperator& b) {
  if (a.delta != b.delta) {
    throw std::invalid_argument("semigroup_compare: deltas differ");
  }
  return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
}

}  // namespace lulu
