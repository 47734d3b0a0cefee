#include "lulu/laws.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lulu/envelope.hpp"
#include "lulu/variation.hpp"

namespace lulu {

namespace {

constexpr Law kLaws[] = {Law::Bounding,    Law::DeltaMonotone, Law::Absorption,
                         Law::Idempotence, Law::Envelope,      Law::Semigroup,
                         Law::Ordering,    Law::LocalMonotone, Law::Trend,
                         Law::TotalVariation};

constexpr CanonicalKind kKinds[] = {CanonicalKind::L, CanonicalKind::UL,
                                    CanonicalKind::LU, CanonicalKind::U};

class Accumulator {
 public:
  Accumulator(Law law, const Tolerance& tol, const Domain& d)
      : eps_(tol.eps), slack_(tol.position_slack(d)) {
    result_.law = law;
  }

  void equal(std::string_view what, const PiecewiseLinear& a,
             const PiecewiseLinear& b) {
    record(what, distance_within(a, b, slack_));
  }

  void leq(std::string_view what, const PiecewiseLinear& a,
           const PiecewiseLinear& b) {
    record(what, excess_within(a, b, slack_));
  }

  void value(std::string_view what, double discrepancy) {
    record(what, std::abs(discrepancy));
  }

  void truth(std::string_view what, bool ok) {
    result_.checks.emplace_back(what);
    if (!ok) fail(what);
  }

  LawResult finish() && {
    if (result_.detail.empty()) result_.detail = "ok";
    return std::move(result_);
  }

 private:
  void record(std::string_view what, double d) {
    result_.checks.emplace_back(what);
    result_.worst = std::max(result_.worst, d);
    if (!(d <= eps_)) {
      std::ostringstream os;
      os << what << " off by " << d;
      fail(os.str());
    }
  }

  void fail(std::string_view what) {
    result_.passed = false;
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += what;
  }

  double eps_;
  double slack_;
  LawResult result_;
};

// Secondary parameters are dyadic multiples of delta so that shifted jump
// positions stay representable whenever delta is.
double scaled(double delta, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> m(lo, hi);
  return delta * m(rng) / 8.0;
}

PiecewiseLinear zero_like(const PiecewiseLinear& f) {
  return PiecewiseLinear::constant(f.domain(), 0.0);
}

LawResult bounding(const PiecewiseLinear& f, double delta, const LawOptions& o) {
  Accumulator acc(Law::Bounding, o.tol, f.domain());
  acc.leq("L f <= f", o.ops.L(f, delta), f);
  acc.leq("f <= U f", f, o.ops.U(f, delta));
  return std::move(acc).finish();
}

LawResult delta_monotone(const PiecewiseLinear& f, double delta,
                         const LawOptions& o, std::mt19937_64& rng) {
  Accumulator acc(Law::DeltaMonotone, o.tol, f.domain());
  const double other = scaled(delta, rng, 2, 32);
  const double small = std::min(delta, other);
  const double large = std::max(delta, other);
  acc.leq("L_large f <= L_small f", o.ops.L(f, large), o.ops.L(f, small));
  acc.leq("U_small f <= U_large f", o.ops.U(f, small), o.ops.U(f, large));
  return std::move(acc).finish();
}

LawResult absorption(const PiecewiseLinear& f, double delta,
                     const LawOptions& o, std::mt19937_64& rng) {
  Accumulator acc(Law::Absorption, o.tol, f.domain());
  const double other = scaled(delta, rng, 2, 32);
  const double big = std::max(delta, other);
  const auto& L = o.ops.L;
  const auto& U = o.ops.U;
  acc.equal("L_a L_b = L_max", L(L(f, other), delta), L(f, big));
  acc.equal("L_b L_a = L_max", L(L(f, delta), other), L(f, big));
  acc.equal("U_a U_b = U_max", U(U(f, other), delta), U(f, big));
  acc.equal("U_b U_a = U_max", U(U(f, delta), other), U(f, big));
  return std::move(acc).finish();
}

LawResult idempotence(const PiecewiseLinear& f, double delta,
                      const LawOptions& o) {
  Accumulator acc(Law::Idempotence, o.tol, f.domain());
  const auto& L = o.ops.L;
  const auto& U = o.ops.U;
  const PiecewiseLinear lf = L(f, delta);
  const PiecewiseLinear uf = U(f, delta);
  acc.equal("L L = L", L(lf, delta), lf);
  acc.equal("U U = U", U(uf, delta), uf);
  acc.equal("L (id - L) = 0", L(subtract(f, lf), delta), zero_like(f));
  acc.equal("U (id - U) = 0", U(subtract(f, uf), delta), zero_like(f));
  const PiecewiseLinear luf = L(uf, delta);
  const PiecewiseLinear ulf = U(lf, delta);
  acc.equal("(LU)(LU) = LU", L(U(luf, delta), delta), luf);
  acc.equal("(UL)(UL) = UL", U(L(ulf, delta), delta), ulf);
  return std::move(acc).finish();
}

LawResult envelope_laws(const PiecewiseLinear& f, double delta,
                        const LawOptions& o, std::mt19937_64& rng) {
  Accumulator acc(Law::Envelope, o.tol, f.domain());
  const double r = delta / 2;
  const PiecewiseLinear i = lower_envelope(f, r);
  const PiecewiseLinear s = upper_envelope(f, r);
  acc.equal("I S I = I", lower_envelope(upper_envelope(i, r), r), i);
  acc.equal("S I S = S", upper_envelope(lower_envelope(s, r), r), s);
  const double r2 = scaled(delta, rng, 1, 16) / 2;
  acc.equal("I_a I_b = I_{a+b}", lower_envelope(i, r2),
            lower_envelope(f, r + r2));
  acc.equal("S_a S_b = S_{a+b}", upper_envelope(s, r2),
            upper_envelope(f, r + r2));
  acc.leq("I f <= f", i, f);
  acc.leq("f <= S f", f, s);
  return std::move(acc).finish();
}

LawResult semigroup(const PiecewiseLinear& f, double delta,
                    const LawOptions& o, std::mt19937_64& rng) {
  Accumulator acc(Law::Semigroup, o.tol, f.domain());
  const auto& L = o.ops.L;
  const auto& U = o.ops.U;
  const PiecewiseLinear luf = L(U(f, delta), delta);
  const PiecewiseLinear ulf = U(L(f, delta), delta);
  acc.equal("ULU = LU", U(luf, delta), luf);
  acc.equal("LUL = UL", L(ulf, delta), ulf);

  std::uniform_int_distribution<int> len(3, 6);
  std::bernoulli_distribution coin;
  std::vector<Letter> word(static_cast<std::size_t>(len(rng)));
  for (auto& l : word) l = coin(rng) ? Letter::L : Letter::U;
  const OperatorExpr expr(word, delta);
  PiecewiseLinear g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = *it == Letter::L ? L(g, delta) : U(g, delta);
  }
  const CanonicalOperator c = canonicalize(expr);
  acc.equal("word " + expr.to_string() + " = " + std::string(name(c.kind)), g,
            o.ops.apply(c.kind, f, delta));
  return std::move(acc).finish();
}

LawResult ordering(const PiecewiseLinear& f, double delta, const LawOptions& o) {
  Accumulator acc(Law::Ordering, o.tol, f.domain());
  const PiecewiseLinear l = o.ops.L(f, delta);
  const PiecewiseLinear u = o.ops.U(f, delta);
  const PiecewiseLinear ul = o.ops.U(l, delta);
  const PiecewiseLinear lu = o.ops.L(u, delta);
  acc.leq("L <= UL", l, ul);
  acc.leq("UL <= LU", ul, lu);
  acc.leq("LU <= U", lu, u);
  return std::move(acc).finish();
}

LawResult local_monotone(const PiecewiseLinear& f, double delta,
                         const LawOptions& o) {
  Accumulator acc(Law::LocalMonotone, o.tol, f.domain());
  const PiecewiseLinear lu = o.ops.apply(CanonicalKind::LU, f, delta);
  const PiecewiseLinear ul = o.ops.apply(CanonicalKind::UL, f, delta);
  acc.truth("LU f locally delta-monotone",
            is_locally_delta_monotone(lu, delta, o.tol).holds);
  acc.truth("UL f locally delta-monotone",
            is_locally_delta_monotone(ul, delta, o.tol).holds);
  return std::move(acc).finish();
}

LawResult trend(const PiecewiseLinear& f, double delta, const LawOptions& o,
                std::mt19937_64& rng) {
  Accumulator acc(Law::Trend, o.tol, f.domain());
  auto runs = monotone_runs(f, o.tol);
  std::shuffle(runs.begin(), runs.end(), rng);
  runs.resize(std::min<std::size_t>(runs.size(), 4));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto [a, b] : runs) {
    // Half the time a random sub-interval of the run.
    if (unit(rng) < 0.5) {
      const double p = a + (b - a) * unit(rng) * 0.5;
      const double q = b - (b - p) * unit(rng) * 0.5;
      if (p < q) {
        a = p;
        b = q;
      }
    }
    for (CanonicalKind k : kKinds) {
      const Operator op = [&o, k, delta](const PiecewiseLinear& g) {
        return o.ops.apply(k, g, delta);
      };
      const auto v = check_trend_preservation(f, op, a, b, o.tol);
      std::ostringstream os;
      os << name(k) << " on [" << a << ", " << b << "]";
      acc.truth(os.str(), v.holds);
    }
  }
  return std::move(acc).finish();
}

LawResult total_variation_law(const PiecewiseLinear& f, double delta,
                              const LawOptions& o) {
  Accumulator acc(Law::TotalVariation, o.tol, f.domain());
  for (CanonicalKind k : kKinds) {
    const auto report = decompose(f, [&o, k, delta](const PiecewiseLinear& g) {
                          return o.ops.apply(k, g, delta);
                        }).report;
    acc.value("TV defect of " + std::string(name(k)), report.defect);
  }
  return std::move(acc).finish();
}

}  // namespace

double excess_within(const PiecewiseLinear& a, const PiecewiseLinear& b,
                     double slack) {
  const PiecewiseLinear band = slack > 0.0 ? upper_envelope(b, slack) : b;
  return std::max(0.0, max_excess(a, band));
}

double distance_within(const PiecewiseLinear& a, const PiecewiseLinear& b,
                       double slack) {
  if (slack <= 0.0) return sup_distance(a, b);
  return std::max({excess_within(a, b, slack), excess_within(b, a, slack),
                   excess_within(negate(a), negate(b), slack),
                   excess_within(negate(b), negate(a), slack)});
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::Bounding:
      return "bounding";
    case Law::DeltaMonotone:
      return "delta_monotone";
    case Law::Absorption:
      return "absorption";
    case Law::Idempotence:
      return "idempotence";
    case Law::Envelope:
      return "envelope";
    case Law::Semigroup:
      return "semigroup";
    case Law::Ordering:
      return "ordering";
    case Law::LocalMonotone:
      return "local_monotone";
    case Law::Trend:
      return "trend";
    case Law::TotalVariation:
      return "tv";
  }
  return "?";
}

std::optional<Law> parse_law(std::string_view name) {
  for (Law law : kLaws) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

std::vector<Law> all_laws() { return {std::begin(kLaws), std::end(kLaws)}; }

PiecewiseLinear Smoothers::apply(CanonicalKind kind, const PiecewiseLinear& f,
                                 double delta) const {
  switch (kind) {
    case CanonicalKind::L:
      return L(f, delta);
    case CanonicalKind::U:
      return U(f, delta);
    case CanonicalKind::UL:
      return U(L(f, delta), delta);
    case CanonicalKind::LU:
      return L(U(f, delta), delta);
  }
  throw std::logic_error("unreachable canonical kind");
}

LawResult check_law(Law law, const PiecewiseLinear& f, double delta,
                    const LawOptions& opts) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL +
                      static_cast<std::uint64_t>(law));
  switch (law) {
    case Law::Bounding:
      return bounding(f, delta, opts);
    case Law::DeltaMonotone:
      return delta_monotone(f, delta, opts, rng);
    case Law::Absorption:
      return absorption(f, delta, opts, rng);
    case Law::Idempotence:
      return idempotence(f, delta, opts);
    case Law::Envelope:
      return envelope_laws(f, delta, opts, rng);
    case Law::Semigroup:
      return semigroup(f, delta, opts, rng);
    case Law::Ordering:
      return ordering(f, delta, opts);
    case Law::LocalMonotone:
      return local_monotone(f, delta, opts);
    case Law::Trend:
      return trend(f, delta, opts, rng);
    case Law::TotalVariation:
      return total_variation_law(f, delta, opts);
  }
  throw std::logic_error("unreachable law");
}

std::vector<LawResult> check_laws(const PiecewiseLinear& f, double delta,
                                  std::span<const Law> laws,
                                  const LawOptions& opts) {
  std::vector<LawResult> out;
  out.reserve(laws.size());
  for (Law law : laws) out.push_back(check_law(law, f, delta, opts));
  return out;
}

}  // namespace lulu
