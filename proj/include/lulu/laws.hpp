#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lulu/semigroup.hpp"
#include "lulu/signal.hpp"

namespace lulu {

/// Executable forms of the algebraic and variational laws of the LULU
/// operators, checked on one concrete function.
enum class Law {
  Bounding,        // L f <= f <= U f
  DeltaMonotone,   // L decreasing, U increasing in delta
  Absorption,      // L_a L_b = L_max(a,b), same for U
  Idempotence,     // LL = L, UU = U, L(id - L) = 0, U(id - U) = 0, LU/UL too
  Envelope,        // I S I = I, S I S = S, I_a I_b = I_{a+b}, S_a S_b = S_{a+b}
  Semigroup,       // ULU = LU, LUL = UL, word reduction matches evaluation
  Ordering,        // L <= UL <= LU <= U
  LocalMonotone,   // LU f and UL f are locally delta-monotone
  Trend,           // all four operators fully trend preserving
  TotalVariation,  // all four operators TV preserving
};

std::string_view law_name(Law law);
std::optional<Law> parse_law(std::string_view name);
std::vector<Law> all_laws();

/// The smoothers the laws are checked against.  Tests swap in broken
/// implementations to make sure violations are caught.
struct Smoothers {
  std::function<PiecewiseLinear(const PiecewiseLinear&, double)> L = apply_L;
  std::function<PiecewiseLinear(const PiecewiseLinear&, double)> U = apply_U;

  PiecewiseLinear apply(CanonicalKind kind, const PiecewiseLinear& f,
                        double delta) const;
};

struct LawOptions {
  Tolerance tol;
  std::uint64_t seed = 0;
  Smoothers ops;
};

struct LawResult {
  Law law;
  bool passed = true;
  /// Largest discrepancy seen (sup distance or order excess); 0 for purely
  /// boolean checks that passed.
  double worst = 0.0;
  /// The individual comparisons that were run, in order.
  std::vector<std::string> checks;
  std::string detail;
};

/// sup (a - b) up to a horizontal shift of at most `slack`: a is compared
/// against the upper slack-envelope of b.  0 when a <= b within the slack.
double excess_within(const PiecewiseLinear& a, const PiecewiseLinear& b,
                     double slack);
/// Sup distance up to a horizontal shift of at most `slack`; the plain sup
/// distance when slack is 0.
double distance_within(const PiecewiseLinear& a, const PiecewiseLinear& b,
                       double slack);

LawResult check_law(Law law, const PiecewiseLinear& f, double delta,
                    const LawOptions& opts = {});

std::vector<LawResult> check_laws(const PiecewiseLinear& f, double delta,
                                  std::span<const Law> laws,
                                  const LawOptions& opts = {});

}  // namespace lulu
