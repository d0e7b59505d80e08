#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantorvis/cantor_ifs.hpp"
#include "cantorvis/interval.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

// Visibility of lines y = alpha x through K x K, where K = K_lambda. The line
// is blocked exactly when alpha is in the ratio set K / (K \ {0}), and every
// nonzero x in K is lambda^m x* with x* in f_2(K), so the ratio set is
// {0} together with the copies lambda^k * Q, Q = f_2(K) / f_2(K).

enum class RegimeTag {
  Regime1_Vempty,
  Regime2_ExactGaps,
  Regime3a_InteriorBothSides,
  Regime3b_NullComplement,
};
std::string_view to_string(RegimeTag tag);

struct Regime {
  RegimeTag tag;
  bool at_one_third = false;
  bool at_one_quarter = false;
};

/// lambda^2 - 3 lambda + 1; nonpositive on (0, 1/2) iff lambda >= (3 - sqrt 5)/2.
Rational golden_polynomial(const Rational& lambda);

/// Exact regime of the visible set. Throws OutOfRange unless 0 < lambda < 1/2.
Regime regime_classify(const Rational& lambda);

/// The four quotient pieces J_1..J_4 of the refined pair (I~, J~) together
/// with the unrefined quotient [a/(b+t), (a+t)/b].
struct Key2Parts {
  std::array<Interval, 4> parts;
  Interval full;
};

/// Requires |I| = |J| = t > 0 (LengthMismatch) and J.lo >= I.lo, J.lo > 0.
Key2Parts key2_subintervals(const Rational& lambda, const Interval& i, const Interval& j);

/// True iff J_1 u J_2 u J_3 u J_4 is the single interval `full`.
bool key2_check(const Rational& lambda, const Interval& i, const Interval& j);

/// key2_check over every ordered pair (I, J) of rank-k basic intervals inside
/// [1 - lambda, 1] with J.lo >= I.lo, for k = 1..n. Stops at the first depth
/// where some pair fails.
struct Key2WindowReport {
  int depth_checked = 0;
  std::size_t pairs_checked = 0;
  std::optional<int> first_failing_depth;
  std::optional<std::pair<Interval, Interval>> failing_pair;
};
Key2WindowReport key2_window_check(const Rational& lambda, int n, int max_depth = kDefaultMaxDepth);

/// Outer cover of f_2(K)/f_2(K): the union of I/J over all pairs of rank-n
/// basic intervals in [1 - lambda, 1]. Nonincreasing in n. Needs n >= 1 and
/// 4^(n-1) <= 2^max_depth.
IntervalSet quotient_core_cover(const Rational& lambda, int n, int max_depth = kDefaultMaxDepth);

struct RatioSetStructure {
  IntervalSet core;
  long k_min = 0;
  long k_max = 0;
  bool exact = false;
  /// lambda^k * core for k = k_min..k_max, largest scale first.
  std::vector<std::pair<long, IntervalSet>> copies;
  /// Hulls lambda^k [1 - lambda, 1/(1 - lambda)] pairwise disjoint.
  bool copies_disjoint = false;
  /// Union of the copies (0 is added separately; it is always a ratio).
  IntervalSet copies_union;
};

RatioSetStructure ratio_set_structure(const Rational& lambda, long k_window, int n,
                                      int max_depth = kDefaultMaxDepth);

enum class Visibility { Visible, NotVisible, UnknownAtDepth };
std::string_view to_string(Visibility v);

struct VisibilityAnswer {
  Visibility answer = Visibility::UnknownAtDepth;
  /// zero-slope, scale-core, endpoint-ratio, scale-gap, cover-gap, inside-cover.
  std::string reason;
  std::optional<long> scale;
  /// NotVisible via an exact core: the copy lambda^k [1-lambda, 1/(1-lambda)].
  std::optional<Interval> copy;
  /// NotVisible via endpoints: x, y in K with x / y = alpha.
  std::optional<std::pair<Rational, Rational>> witness;
  /// Visible: closure of the open gap of the ratio set containing alpha.
  std::optional<Interval> gap;
};

/// Three-valued visibility of y = alpha x. Exact for lambda >= 1/3; below 1/3
/// it uses the depth-n outer cover and endpoint witnesses and answers
/// UnknownAtDepth when neither settles the question. Throws NegativeSlope.
VisibilityAnswer visible_query(const Rational& lambda, const Rational& alpha, int n,
                               int max_depth = kDefaultMaxDepth);

struct VisibleSet {
  /// Closures of the open visible gaps, sorted.
  IntervalSet gaps;
  bool exact = false;
  /// Set for Regime 1, where V is empty and nothing is enumerated.
  bool regime_unsupported = false;
  Regime regime;
};

/// Visible slopes between the copies k = -k_window..k_window: exact for
/// Regime 2, an inner approximation (complement of the outer cover) for
/// Regime 3.
VisibleSet visible_set(const Rational& lambda, long k_window, int n,
                       int max_depth = kDefaultMaxDepth);

/// lambda^2 / (1 - 2 lambda)^2 > lambda, compared exactly.
bool thickness_condition(const Rational& lambda);

}  // namespace cantorvis
