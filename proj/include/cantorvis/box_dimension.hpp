#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cantorvis/interval.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

struct ScaleCover {
  Rational scale;
  IntervalSet set;
};

/// Number of grid boxes [k s, (k+1) s) meeting the set.
std::uint64_t box_count(const IntervalSet& set, const Rational& scale);

struct BoxDimEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::vector<std::uint64_t> counts;
  /// -log(scale) and log(count) per input, the regression data.
  std::vector<double> log_inv_scale;
  std::vector<double> log_count;
};

/// Least-squares slope of log N(s) against -log s. Needs at least three
/// strictly decreasing positive scales (InsufficientScales).
BoxDimEstimate box_dim_estimate(std::span<const ScaleCover> covers);

}  // namespace cantorvis
