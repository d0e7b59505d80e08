#include "cantorvis/interval.hpp"

#include <algorithm>
#include <ostream>

#include "cantorvis/error.hpp"

namespace cantorvis {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw Error(ErrorCode::OutOfRange, "interval with lo > hi: [" + lo_.str() + "," +
                                           hi_.str() + "]");
  }
}

std::string Interval::str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.str(); }

std::vector<Interval> intersect(const Interval& a, const Interval& b) {
  if (!a.meets(b)) return {};
  return {Interval(max(a.lo(), b.lo()), min(a.hi(), b.hi()))};
}

Rational IntervalSet::total_length() const {
  Rational sum;
  for (const auto& p : parts_) sum += p.length();
  return sum;
}

long IntervalSet::locate(const Rational& x) const {
  // First part whose hi >= x; it contains x iff its lo <= x.
  auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                             [](const Interval& p, const Rational& v) { return p.hi() < v; });
  if (it == parts_.end() || x < it->lo()) return -1;
  return static_cast<long>(it - parts_.begin());
}

bool IntervalSet::contains(const Rational& x) const { return locate(x) >= 0; }

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw Error(ErrorCode::OutOfRange, "hull of an empty interval set");
  return Interval(parts_.front().lo(), parts_.back().hi());
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << "}";
}

IntervalSet normalize_union(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo() <= out.parts_.back().hi()) {
      if (out.parts_.back().hi() < iv.hi()) {
        out.parts_.back() = Interval(out.parts_.back().lo(), iv.hi());
      }
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw(a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  return normalize_union(std::move(raw));
}

Interval interval_quotient(const Interval& num, const Interval& den) {
  if (den.lo().sign() <= 0) {
    throw Error(ErrorCode::NonPositiveDenominator,
                "quotient denominator interval " + den.str() + " is not positive");
  }
  // For y > 0, x/y is increasing in x; decreasing in y when x >= 0 and
  // increasing when x < 0, so take the extreme corners.
  const Rational a = num.lo() / (num.lo().sign() >= 0 ? den.hi() : den.lo());
  const Rational b = num.hi() / (num.hi().sign() >= 0 ? den.lo() : den.hi());
  return Interval(a, b);
}

Interval affine_image(const Interval& iv, const Rational& r, const Rational& c) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroRatio, "affine map with zero ratio");
  Rational a = r * iv.lo() + c;
  Rational b = r * iv.hi() + c;
  if (r.sign() < 0) std::swap(a, b);
  return Interval(std::move(a), std::move(b));
}

IntervalSet affine_image(const IntervalSet& s, const Rational& r, const Rational& c) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroRatio, "affine map with zero ratio");
  std::vector<Interval> raw;
  raw.reserve(s.size());
  for (const auto& p : s) raw.push_back(affine_image(p, r, c));
  return normalize_union(std::move(raw));
}

bool is_subset(const IntervalSet& inner, const IntervalSet& outer) {
  for (const auto& p : inner) {
    const long i = outer.locate(p.lo());
    if (i < 0 || !outer[static_cast<std::size_t>(i)].contains(p)) return false;
  }
  return true;
}

std::vector<Interval> gaps_within(const Interval& outer, const IntervalSet& cover) {
  std::vector<Interval> gaps;
  Rational cursor = outer.lo();
  for (const auto& p : cover) {
    if (p.hi() < outer.lo()) continue;
    if (outer.hi() < p.lo()) break;
    if (cursor < p.lo()) gaps.emplace_back(cursor, p.lo());
    if (cursor < p.hi()) cursor = p.hi();
  }
  if (cursor < outer.hi()) gaps.emplace_back(cursor, outer.hi());
  return gaps;
}

}  // namespace cantorvis
