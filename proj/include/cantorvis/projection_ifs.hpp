#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cantorvis/cantor_ifs.hpp"
#include "cantorvis/interval.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

/// An IFS map tagged with its 1-based label.
struct LabeledMap {
  int label;
  IfsMap map;
};

/// The four-map IFS whose attractor is the projection of K x K along lines
/// of slope t onto the y-axis, a -> y - t x:
///   g_1 = lambda x - (1-lambda) t,  g_2 = lambda x + (1-lambda)(1-t),
///   g_3 = lambda x,                 g_4 = lambda x + 1 - lambda.
/// g_1..g_4 correspond to the digit pairs (x,y) = (2,1), (2,2), (1,1), (1,2).
class ProjectionIfs {
 public:
  const Rational& lambda() const { return lambda_; }
  const Rational& slope_t() const { return t_; }
  const std::array<IfsMap, 4>& maps() const { return maps_; }
  const IfsMap& map(int label) const { return maps_.at(static_cast<std::size_t>(label - 1)); }
  /// E = [-t, 1].
  Interval attractor() const { return Interval(-t_, Rational(1)); }
  Interval image(int label) const { return map(label).image(attractor()); }
  /// Images sorted by left endpoint cover E with nonnegative overlaps.
  bool interval_attractor() const { return interval_attractor_; }
  /// Two labels name the same map (only g_2 = g_3, at t = 1).
  bool degenerate() const { return distinct_labels_.size() < 4; }
  /// One label per distinct map, the smallest of each coincident group.
  const std::vector<int>& distinct_labels() const { return distinct_labels_; }
  std::vector<LabeledMap> distinct_maps() const;

 private:
  friend ProjectionIfs build_projection_ifs(const Rational& lambda, const Rational& t);
  friend bool is_interval_attractor(const Rational& lambda, const Rational& t);
  ProjectionIfs(Rational lambda, Rational t);

  Rational lambda_;
  Rational t_;
  std::array<IfsMap, 4> maps_;
  bool interval_attractor_ = false;
  std::vector<int> distinct_labels_;
};

/// Whether the four images of [-t, 1] cover it (no exception).
bool is_interval_attractor(const Rational& lambda, const Rational& t);

/// Builds g_1..g_4. Throws OutOfRange for bad parameters and
/// NotIntervalAttractor when the images do not cover [-t, 1]. For t >= 1 the
/// generic overlaps are cross-checked against the closed forms
///   H_1 = [1-lambda-t, lambda-(1-lambda)t], H_2 = [-lambda t, 1-(1-lambda)t],
///   H_3 = [1-lambda-lambda t, lambda].
ProjectionIfs build_projection_ifs(const Rational& lambda, const Rational& t);

struct OverlapRegion {
  Interval region;
  int left_label;   // map whose image comes first in left-endpoint order
  int right_label;
  bool is_point() const { return region.is_point(); }
};

/// H_1, H_2, ... : intersections of consecutive images in left-endpoint order.
struct OverlapRegions {
  std::vector<OverlapRegion> regions;
  /// Set when coincident maps were merged before intersecting.
  bool degenerate = false;
  std::vector<std::string> warnings;

  /// H as a closed interval set.
  IntervalSet hole() const;
};

OverlapRegions overlap_regions(const ProjectionIfs& ifs);

/// All labels j (index order) with x in g_j(E). Throws OutOfAttractor.
std::vector<int> admissible_branches(const ProjectionIfs& ifs, const Rational& x);

/// Number of words w of length n with x in g_w(E), i.e. with every partial
/// inverse image inside E. All four labels count, also when two coincide.
std::uint64_t coding_count(const ProjectionIfs& ifs, const Rational& a, int n);

/// Brute-force slice multiplicity: rank-n product cells f_w[0,1] x f_v[0,1]
/// whose projection interval contains a. Zero outside [-t, 1].
std::uint64_t slice_count_2d(const Rational& lambda, const Rational& t, const Rational& a, int n);

/// N_0..N_n: number of words (over the distinct maps) of each length whose
/// set of points, followed along the word, keeps a positive-length part out
/// of the hole interiors. Grows like rho^n for the survivor system.
std::vector<std::uint64_t> survivor_word_counts(const ProjectionIfs& ifs, int n);

}  // namespace cantorvis
