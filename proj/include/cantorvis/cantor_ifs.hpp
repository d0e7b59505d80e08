#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantorvis/interval.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

/// Default ceiling on enumeration size, as a power of two (2^24 items).
inline constexpr int kDefaultMaxDepth = 24;

/// Orientation-preserving contraction x -> ratio * x + shift, 0 < ratio < 1.
class IfsMap {
 public:
  IfsMap(Rational ratio, Rational shift);

  const Rational& ratio() const { return ratio_; }
  const Rational& shift() const { return shift_; }

  Rational apply(const Rational& x) const { return ratio_ * x + shift_; }
  Rational invert(const Rational& y) const { return (y - shift_) / ratio_; }
  Interval image(const Interval& iv) const;

  friend bool operator==(const IfsMap&, const IfsMap&) = default;

 private:
  Rational ratio_;
  Rational shift_;
};

/// Finite word over {1..alphabet}; digit k names the k-th map of an IFS.
struct Coding {
  std::vector<std::uint8_t> digits;
  int alphabet = 2;

  std::size_t size() const { return digits.size(); }
  std::string str() const;
  static Coding parse(std::string_view text, int alphabet);

  friend bool operator==(const Coding&, const Coding&) = default;
};

/// Parameters of K_lambda, the attractor of {lambda x, lambda x + 1 - lambda}.
class CantorParams {
 public:
  /// Throws Error{OutOfRange} unless 0 < lambda < 1/2.
  explicit CantorParams(Rational lambda);

  const Rational& lambda() const { return lambda_; }
  /// f_1 and f_2.
  const IfsMap& map(int index) const { return maps_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<IfsMap>& maps() const { return maps_; }

 private:
  Rational lambda_;
  std::vector<IfsMap> maps_;
};

/// f_w([0,1]) for the word w over {1,2}.
Interval basic_interval(const CantorParams& p, const Coding& w);

/// Number of rank-n basic intervals (2^n); throws DepthBudgetExceeded past
/// the ceiling so callers can size buffers before enumerating.
std::size_t basic_interval_count(int n, int max_depth = kDefaultMaxDepth);

/// Union of all rank-n basic intervals, sorted; exactly 2^n parts.
IntervalSet basic_intervals(const CantorParams& p, int n, int max_depth = kDefaultMaxDepth);

/// Sorted endpoints of all rank-n basic intervals (every endpoint of a rank
/// k <= n interval appears among them).
std::vector<Rational> basic_endpoints(const CantorParams& p, int n,
                                      int max_depth = kDefaultMaxDepth);

/// The two end-subintervals of proportion lambda of I = [a, a+t]:
/// {[a, a + lambda t], [a + t - lambda t, a + t]}.
IntervalSet refine_tilde(const CantorParams& p, const Interval& iv);

/// Smallest rank k <= n such that x is the left (resp. right) endpoint of a
/// rank-k basic interval, found by inverse iteration.
std::optional<int> left_endpoint_rank(const CantorParams& p, const Rational& x, int n);
std::optional<int> right_endpoint_rank(const CantorParams& p, const Rational& x, int n);

/// Rank-n basic intervals contained in [a, b], where a and b must be left and
/// right endpoints of basic intervals of rank <= n (NotBasicEndpoints).
IntervalSet window_gn(const CantorParams& p, const Rational& a, const Rational& b, int n,
                      int max_depth = kDefaultMaxDepth);

enum class Membership { In, Out, UnknownAtDepth };
std::string_view to_string(Membership m);

/// Finite-depth membership of a rational in K_lambda. In is reported only for
/// endpoints of basic intervals of rank <= n; Out when x leaves the rank-n
/// covering.
Membership membership(const CantorParams& p, const Rational& x, int n);

}  // namespace cantorvis
