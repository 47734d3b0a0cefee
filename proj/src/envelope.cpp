#include "lulu/envelope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lulu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCoalesceUlps = 8.0;

// Static range-minimum table.
class SparseMin {
 public:
  explicit SparseMin(std::vector<double> base) {
    const std::size_t n = base.size();
    table_.push_back(std::move(base));
    for (std::size_t w = 1; 2 * w <= n; w *= 2) {
      const auto& prev = table_.back();
      std::vector<double> next(n - 2 * w + 1);
      for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = std::min(prev[i], prev[i + w]);
      }
      table_.push_back(std::move(next));
    }
  }

  // Inclusive range [lo, hi], lo <= hi.
  double query(std::size_t lo, std::size_t hi) const {
    const std::size_t len = hi - lo + 1;
    const int level = std::bit_width(len) - 1;
    const auto& row = table_[static_cast<std::size_t>(level)];
    return std::min(row[lo], row[hi + 1 - (std::size_t{1} << level)]);
  }

 private:
  std::vector<std::vector<double>> table_;
};

// Candidate on a cell: a constant, or a segment line read through a shifted
// window edge.
struct Piece {
  bool is_line = false;
  double constant = kInf;
  std::size_t seg = 0;
  double shift = 0.0;
};

class LowerEnvelopeSweep {
 public:
  LowerEnvelopeSweep(const PiecewiseLinear& f, double r)
      : f_(f), r_(r), k_(f.segments()), mins_(interleaved(f)) {
    const auto nodes = f.nodes();
    plus_.reserve(nodes.size());
    minus_.reserve(nodes.size());
    for (const auto& b : nodes) {
      plus_.push_back(b.x + r);
      minus_.push_back(b.x - r);
    }
  }

  PiecewiseLinear run() {
    const std::vector<double> events = coalesce_events();

    std::vector<Breakpoint> out;
    out.reserve(3 * events.size());
    double pending_left = 0.0;
    for (std::size_t j = 0; j < events.size(); ++j) {
      const double e = events[j];
      const double v = window_inf_at(e);
      out.push_back({e, j == 0 ? v : pending_left, v, v});
      if (j + 1 == events.size()) break;
      pending_left = emit_cell(e, events[j + 1], out);
    }
    return normalize(PiecewiseLinear(std::move(out)));
  }

 private:
  // Window edges x_i +- r that land within a few ulps of each other (or of
  // the domain ends) are the same point in exact arithmetic; rounding would
  // otherwise leave slivers of width 1 ulp.  Each cluster is replaced by its
  // smallest member, in the event list and in plus_/minus_ alike, so the
  // membership tests below stay consistent.
  std::vector<double> coalesce_events() {
    const Domain d = f_.domain();
    const double scale = std::max({std::abs(d.lo()), std::abs(d.hi()), r_});
    gap_ = kCoalesceUlps * std::numeric_limits<double>::epsilon() * scale;
    const double gap = gap_;
    std::vector<double> raw{d.lo(), d.hi()};
    for (std::size_t i = 0; i <= k_; ++i) {
      raw.push_back(plus_[i]);
      raw.push_back(minus_[i]);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<double> rep(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      rep[i] = i > 0 && raw[i] - raw[i - 1] <= gap ? rep[i - 1] : raw[i];
    }
    // The domain ends win over nearby shifted edges.
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (std::abs(raw[i] - d.lo()) <= gap) rep[i] = d.lo();
      if (std::abs(raw[i] - d.hi()) <= gap) rep[i] = d.hi();
    }
    auto snap = [&](double v) {
      const auto i = std::lower_bound(raw.begin(), raw.end(), v) - raw.begin();
      return rep[static_cast<std::size_t>(i)];
    };
    for (double& v : plus_) v = snap(v);
    for (double& v : minus_) v = snap(v);

    std::vector<double> events;
    for (double v : rep) {
      if (v >= d.lo() && v <= d.hi() && (events.empty() || events.back() != v)) {
        events.push_back(v);
      }
    }
    return events;
  }

  static SparseMin interleaved(const PiecewiseLinear& f) {
    // Even slots: point values.  Odd slots: infimum over the open segment.
    const auto nodes = f.nodes();
    std::vector<double> w(2 * nodes.size() - 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      w[2 * i] = nodes[i].value;
      if (i + 1 < nodes.size()) {
        w[2 * i + 1] = std::min(nodes[i].right, nodes[i + 1].left);
      }
    }
    return SparseMin(std::move(w));
  }

  // Infimum of f over the closed window [e - r, e + r] ∩ Ω.
  double window_inf_at(double e) const {
    const auto first = static_cast<std::size_t>(
        std::lower_bound(plus_.begin(), plus_.end(), e) - plus_.begin());
    const auto last = static_cast<std::size_t>(
        std::upper_bound(minus_.begin(), minus_.end(), e) - minus_.begin() - 1);
    const bool left_partial = first > 0 && plus_[first] > e;
    const bool right_partial = last < k_ && minus_[last] < e;
    const auto nodes = f_.nodes();
    double v = kInf;
    if (first <= last) v = mins_.query(2 * first, 2 * last);
    if (left_partial) {
      v = std::min(v, f_.segment_value(first - 1, e - r_));
      if (first <= last) v = std::min(v, nodes[first].left);
    }
    if (right_partial) {
      v = std::min(v, f_.segment_value(last, e + r_));
      if (first <= last) v = std::min(v, nodes[last].right);
    }
    return v;
  }

  double piece_value(const Piece& p, double x) const {
    return p.is_line ? f_.segment_value(p.seg, x + p.shift) : p.constant;
  }

  double min_at(const std::vector<Piece>& pieces, double x) const {
    double v = kInf;
    for (const auto& p : pieces) v = std::min(v, piece_value(p, x));
    return v;
  }

  // Appends the interior nodes of the open cell (a, b) and sets the right
  // limit of the node at a.  Returns the left limit at b.
  double emit_cell(double a, double b, std::vector<Breakpoint>& out) const {
    const auto first = static_cast<std::size_t>(
        std::upper_bound(plus_.begin(), plus_.end(), a) - plus_.begin());
    const auto last = static_cast<std::size_t>(
        std::upper_bound(minus_.begin(), minus_.end(), a) - minus_.begin() - 1);
    const bool left_partial = first > 0;
    const bool right_partial = last < k_;
    const auto nodes = f_.nodes();

    Piece c;
    if (first <= last) {
      c.constant = mins_.query(2 * first, 2 * last);
      if (left_partial) c.constant = std::min(c.constant, nodes[first].left);
      if (right_partial) c.constant = std::min(c.constant, nodes[last].right);
    }
    std::vector<Piece> pieces;
    if (c.constant < kInf) pieces.push_back(c);
    if (left_partial) pieces.push_back({true, 0.0, first - 1, -r_});
    if (right_partial) pieces.push_back({true, 0.0, last, r_});

    std::vector<double> cuts;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      for (std::size_t q = p + 1; q < pieces.size(); ++q) {
        const double d0 = piece_value(pieces[p], a) - piece_value(pieces[q], a);
        const double d1 = piece_value(pieces[p], b) - piece_value(pieces[q], b);
        if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
          const double x = a + d0 / (d0 - d1) * (b - a);
          // A crossing a few ulps from a cell edge is at the edge.
          if (x - a > gap_ && b - x > gap_) cuts.push_back(x);
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    out.back().right = min_at(pieces, a);
    for (double x : cuts) {
      const double v = min_at(pieces, x);
      out.push_back({x, v, v, v});
    }
    return min_at(pieces, b);
  }

  const PiecewiseLinear& f_;
  double r_;
  double gap_ = 0.0;
  std::size_t k_;
  SparseMin mins_;
  std::vector<double> plus_;
  std::vector<double> minus_;
};

void require_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("envelope radius must be positive and finite");
  }
}

template <typename Better>
DiscreteSignal windowed_extreme(const DiscreteSignal& s, std::size_t back,
                                std::size_t fwd, Better better) {
  const auto v = s.values();
  const std::size_t n = v.size();
  std::vector<double> out(n);
  // Indices with strictly improving values from head to tail.
  std::vector<std::size_t> queue(n);
  std::size_t head = 0;
  std::size_t tail = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = fwd >= n - 1 - i ? n - 1 : i + fwd;
    for (; next <= hi; ++next) {
      while (tail > head && !better(v[queue[tail - 1]], v[next])) --tail;
      queue[tail++] = next;
    }
    const std::size_t lo = i >= back ? i - back : 0;
    while (queue[head] < lo) ++head;
    out[i] = v[queue[head]];
  }
  return s.with_values(std::move(out));
}

}  // namespace

PiecewiseLinear lower_envelope(const PiecewiseLinear& f, double r) {
  require_radius(r);
  LowerEnvelopeSweep sweep(f, r);
  return sweep.run();
}

PiecewiseLinear upper_envelope(const PiecewiseLinear& f, double r) {
  require_radius(r);
  const PiecewiseLinear g = negate(f);
  LowerEnvelopeSweep sweep(g, r);
  return negate(sweep.run());
}

PiecewiseLinear lsc_regularization(const PiecewiseLinear& f) {
  std::vector<Breakpoint> nodes(f.nodes().begin(), f.nodes().end());
  for (auto& b : nodes) b.value = std::min({b.left, b.value, b.right});
  return normalize(PiecewiseLinear(std::move(nodes)));
}

PiecewiseLinear usc_regularization(const PiecewiseLinear& f) {
  std::vector<Breakpoint> nodes(f.nodes().begin(), f.nodes().end());
  for (auto& b : nodes) b.value = std::max({b.left, b.value, b.right});
  return normalize(PiecewiseLinear(std::move(nodes)));
}

DiscreteSignal windowed_min(const DiscreteSignal& s, std::size_t back,
                            std::size_t fwd) {
  return windowed_extreme(s, back, fwd, std::less<double>());
}

DiscreteSignal windowed_max(const DiscreteSignal& s, std::size_t back,
                            std::size_t fwd) {
  return windowed_extreme(s, back, fwd, std::greater<double>());
}

}  // namespace lulu
