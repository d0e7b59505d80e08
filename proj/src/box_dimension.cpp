#include "cantorvis/box_dimension.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cantorvis/error.hpp"

namespace cantorvis {

std::uint64_t box_count(const IntervalSet& set, const Rational& scale) {
  if (scale.sign() <= 0) throw Error(ErrorCode::OutOfRange, "box scale must be positive");
  std::uint64_t count = 0;
  std::optional<Rational> last;  // highest box index already counted
  for (const auto& part : set) {
    Rational first = (part.lo() / scale).floor();
    const Rational final = (part.hi() / scale).floor();
    if (last && first <= *last) first = *last + Rational(1);
    if (first <= final) {
      count += static_cast<std::uint64_t>((final - first).to_double()) + 1;
      last = final;
    }
  }
  return count;
}

BoxDimEstimate box_dim_estimate(std::span<const ScaleCover> covers) {
  if (covers.size() < 3) {
    throw Error(ErrorCode::InsufficientScales,
                "box dimension needs at least 3 scales, got " + std::to_string(covers.size()));
  }
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (covers[i].scale.sign() <= 0 || (i > 0 && !(covers[i].scale < covers[i - 1].scale))) {
      throw Error(ErrorCode::InsufficientScales, "scales must be positive and strictly decreasing");
    }
  }
  BoxDimEstimate est;
  for (const auto& c : covers) {
    const auto n = box_count(c.set, c.scale);
    if (n == 0) throw Error(ErrorCode::InsufficientScales, "empty cover at scale " + c.scale.str());
    est.counts.push_back(n);
    est.log_inv_scale.push_back(-std::log(c.scale.to_double()));
    est.log_count.push_back(std::log(static_cast<double>(n)));
  }
  const double m = static_cast<double>(covers.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const double x = est.log_inv_scale[i];
    const double y = est.log_count[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  est.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  est.intercept = (sy - est.slope * sx) / m;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const double r = est.log_count[i] - (est.slope * est.log_inv_scale[i] + est.intercept);
    est.max_residual = std::max(est.max_residual, std::abs(r));
  }
  return est;
}

}  // namespace cantorvis
