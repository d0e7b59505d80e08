#include "cantorvis/projection_ifs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cantorvis/error.hpp"

namespace cantorvis {

namespace {

std::array<IfsMap, 4> make_maps(const Rational& lam, const Rational& t) {
  const Rational one_minus = Rational(1) - lam;
  return {IfsMap(lam, -(one_minus * t)), IfsMap(lam, one_minus * (Rational(1) - t)),
          IfsMap(lam, Rational(0)), IfsMap(lam, one_minus)};
}

void check_parameters(const Rational& lambda, const Rational& t) {
  const CantorParams checked(lambda);
  if (t.sign() <= 0) throw Error(ErrorCode::OutOfRange, "slope t = " + t.str() + " must be positive");
}

// Labels sorted by the left endpoint of their image (ties by label).
std::vector<int> sorted_labels(const ProjectionIfs& ifs, const std::vector<int>& labels) {
  std::vector<int> order = labels;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ifs.image(a).lo() < ifs.image(b).lo();
  });
  return order;
}

bool covers(const std::vector<Interval>& sorted_images, const Interval& target) {
  if (sorted_images.front().lo() != target.lo()) return false;
  Rational reach = sorted_images.front().hi();
  for (std::size_t i = 1; i < sorted_images.size(); ++i) {
    if (reach < sorted_images[i].lo()) return false;
    reach = max(reach, sorted_images[i].hi());
  }
  return reach == target.hi();
}

}  // namespace

ProjectionIfs::ProjectionIfs(Rational lambda, Rational t)
    : lambda_(std::move(lambda)), t_(std::move(t)), maps_(make_maps(lambda_, t_)) {
  for (int j = 1; j <= 4; ++j) {
    const bool repeat = std::any_of(distinct_labels_.begin(), distinct_labels_.end(),
                                    [&](int k) { return map(k) == map(j); });
    if (!repeat) distinct_labels_.push_back(j);
  }
  std::vector<Interval> images;
  for (int j : sorted_labels(*this, {1, 2, 3, 4})) images.push_back(image(j));
  interval_attractor_ = covers(images, attractor());
}

std::vector<LabeledMap> ProjectionIfs::distinct_maps() const {
  std::vector<LabeledMap> out;
  for (int j : distinct_labels_) out.push_back({j, map(j)});
  return out;
}

bool is_interval_attractor(const Rational& lambda, const Rational& t) {
  check_parameters(lambda, t);
  return ProjectionIfs(lambda, t).interval_attractor();
}

IntervalSet OverlapRegions::hole() const {
  std::vector<Interval> raw;
  for (const auto& r : regions) raw.push_back(r.region);
  return normalize_union(std::move(raw));
}

namespace {

OverlapRegions compute_overlaps(const ProjectionIfs& ifs) {
  OverlapRegions out;
  out.degenerate = ifs.degenerate();
  if (out.degenerate) {
    std::string kept;
    for (int j : ifs.distinct_labels()) kept += (kept.empty() ? "g" : ",g") + std::to_string(j);
    out.warnings.push_back("DegenerateIfs: coincident maps merged, using " + kept);
  }
  const auto order = sorted_labels(ifs, ifs.distinct_labels());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto meet = intersect(ifs.image(order[i]), ifs.image(order[i + 1]));
    if (meet.empty()) continue;
    out.regions.push_back({meet.front(), order[i], order[i + 1]});
  }
  return out;
}

}  // namespace

ProjectionIfs build_projection_ifs(const Rational& lambda, const Rational& t) {
  check_parameters(lambda, t);
  ProjectionIfs ifs(lambda, t);
  if (!ifs.interval_attractor()) {
    throw Error(ErrorCode::NotIntervalAttractor,
                "images of [-t,1] under g_1..g_4 do not cover it for lambda=" + lambda.str() +
                    ", t=" + t.str());
  }
  if (t >= Rational(1) && !ifs.degenerate()) {
    const Rational one_minus = Rational(1) - lambda;
    const std::array<Interval, 3> printed = {
        Interval(one_minus - t, lambda - one_minus * t),
        Interval(-lambda * t, Rational(1) - one_minus * t),
        Interval(one_minus - lambda * t, lambda)};
    const auto regions = compute_overlaps(ifs).regions;
    if (regions.size() != 3) throw std::logic_error("expected three overlaps for t >= 1");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(regions[i].region == printed[i]) || regions[i].left_label != static_cast<int>(i) + 1) {
        throw std::logic_error("overlap H_" + std::to_string(i + 1) + " = " + regions[i].region.str() +
                               " disagrees with closed form " + printed[i].str());
      }
    }
  }
  return ifs;
}

OverlapRegions overlap_regions(const ProjectionIfs& ifs) {
  if (!ifs.interval_attractor()) {
    throw Error(ErrorCode::NotIntervalAttractor, "overlap regions need an interval attractor");
  }
  return compute_overlaps(ifs);
}

std::vector<int> admissible_branches(const ProjectionIfs& ifs, const Rational& x) {
  if (!ifs.attractor().contains(x)) {
    throw Error(ErrorCode::OutOfAttractor, x.str() + " is outside " + ifs.attractor().str());
  }
  std::vector<int> out;
  for (int j = 1; j <= 4; ++j) {
    if (ifs.image(j).contains(x)) out.push_back(j);
  }
  return out;
}

std::uint64_t coding_count(const ProjectionIfs& ifs, const Rational& a, int n) {
  if (!ifs.attractor().contains(a)) {
    throw Error(ErrorCode::OutOfAttractor, a.str() + " is outside " + ifs.attractor().str());
  }
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative depth");
  // Words reaching the same point share their continuations, so carry
  // multiplicities level by level.
  std::map<Rational, std::uint64_t> level{{a, 1}};
  const std::array<Interval, 4> images = {ifs.image(1), ifs.image(2), ifs.image(3), ifs.image(4)};
  for (int step = 0; step < n; ++step) {
    std::map<Rational, std::uint64_t> next;
    for (const auto& [x, mult] : level) {
      for (int j = 1; j <= 4; ++j) {
        if (images[static_cast<std::size_t>(j - 1)].contains(x)) next[ifs.map(j).invert(x)] += mult;
      }
    }
    level = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& entry : level) total += entry.second;
  return total;
}

namespace {

struct CellWalk {
  const Rational& lam;
  const Rational& t;
  const Rational& a;
  Rational one_minus;

  std::uint64_t count(const Rational& x0, const Rational& y0, const Rational& side, int remaining) const {
    // Projection of [x0, x0+s] x [y0, y0+s] under (x, y) -> y - t x.
    if (a < y0 - (x0 + side) * t || y0 + side - x0 * t < a) return 0;
    if (remaining == 0) return 1;
    const Rational child = side * lam;
    const Rational offset = side * one_minus;
    std::uint64_t total = 0;
    for (int dx = 0; dx < 2; ++dx) {
      for (int dy = 0; dy < 2; ++dy) {
        total += count(dx ? x0 + offset : x0, dy ? y0 + offset : y0, child, remaining - 1);
      }
    }
    return total;
  }
};

}  // namespace

std::uint64_t slice_count_2d(const Rational& lambda, const Rational& t, const Rational& a, int n) {
  check_parameters(lambda, t);
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative depth");
  const CellWalk walk{lambda, t, a, Rational(1) - lambda};
  return walk.count(Rational(0), Rational(0), Rational(1), n);
}

namespace {

using Pieces = std::vector<Interval>;

struct PiecesLess {
  bool operator()(const Pieces& x, const Pieces& y) const {
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](const Interval& p, const Interval& q) {
          return p.lo() < q.lo() || (p.lo() == q.lo() && p.hi() < q.hi());
        });
  }
};

// Positive-length parts of `pieces` outside the open hole, clipped to `clip`.
Pieces survive(const Pieces& pieces, const IntervalSet& hole, const Interval& clip) {
  Pieces out;
  for (const auto& p : pieces) {
    for (const auto& q : intersect(p, clip)) {
      for (const auto& g : gaps_within(q, hole)) {
        if (!g.is_point()) out.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> survivor_word_counts(const ProjectionIfs& ifs, int n) {
  const auto hole = overlap_regions(ifs).hole();
  const auto maps = ifs.distinct_maps();
  // Distinct point sets reached after k steps, with the number of words
  // reaching each.
  std::map<Pieces, std::uint64_t, PiecesLess> level{{Pieces{ifs.attractor()}, 1}};
  std::vector<std::uint64_t> counts{1};
  for (int step = 0; step < n; ++step) {
    std::map<Pieces, std::uint64_t, PiecesLess> next;
    for (const auto& [pieces, mult] : level) {
      for (const auto& m : maps) {
        Pieces moved;
        for (const auto& s : survive(pieces, hole, ifs.image(m.label))) {
          moved.emplace_back(m.map.invert(s.lo()), m.map.invert(s.hi()));
        }
        if (!moved.empty()) next[normalize_union(moved).parts()] += mult;
      }
    }
    level = std::move(next);
    std::uint64_t total = 0;
    for (const auto& entry : level) total += entry.second;
    counts.push_back(total);
  }
  return counts;
}

}  // namespace cantorvis
