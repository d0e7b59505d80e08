#include "cantorvis/visibility.hpp"

#include <algorithm>

#include "cantorvis/error.hpp"

namespace cantorvis {

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Regime1_Vempty: return "Regime1_Vempty";
    case RegimeTag::Regime2_ExactGaps: return "Regime2_ExactGaps";
    case RegimeTag::Regime3a_InteriorBothSides: return "Regime3a_InteriorBothSides";
    case RegimeTag::Regime3b_NullComplement: return "Regime3b_NullComplement";
  }
  return "?";
}

std::string_view to_string(Visibility v) {
  switch (v) {
    case Visibility::Visible: return "Visible";
    case Visibility::NotVisible: return "NotVisible";
    case Visibility::UnknownAtDepth: return "UnknownAtDepth";
  }
  return "?";
}

Rational golden_polynomial(const Rational& lambda) {
  return lambda * lambda - Rational(3) * lambda + Rational(1);
}

Regime regime_classify(const Rational& lambda) {
  const CantorParams checked(lambda);
  Regime r{RegimeTag::Regime3b_NullComplement};
  r.at_one_third = lambda == Rational(1, 3);
  r.at_one_quarter = lambda == Rational(1, 4);
  if (golden_polynomial(lambda).sign() <= 0) {
    r.tag = RegimeTag::Regime1_Vempty;
  } else if (lambda >= Rational(1, 3)) {
    r.tag = RegimeTag::Regime2_ExactGaps;
  } else if (lambda > Rational(1, 4)) {
    r.tag = RegimeTag::Regime3a_InteriorBothSides;
  }
  return r;
}

Key2Parts key2_subintervals(const Rational& lambda, const Interval& i, const Interval& j) {
  const Rational t = i.length();
  if (t != j.length() || t.sign() <= 0) {
    throw Error(ErrorCode::LengthMismatch,
                "key2 intervals need equal positive length, got " + i.str() + " and " + j.str());
  }
  const Rational& a = i.lo();
  const Rational& b = j.lo();
  if (b.sign() <= 0) {
    throw Error(ErrorCode::NonPositiveDenominator, "key2 divisor interval " + j.str() + " not positive");
  }
  if (a.sign() < 0 || b < a) {
    throw Error(ErrorCode::OutOfRange, "key2 needs 0 <= I.lo <= J.lo, got " + i.str() + ", " + j.str());
  }
  const Rational lt = lambda * t;
  // r_k, s_k as in the refinement identity; each J_k is (piece of I~)/(piece of J~).
  return Key2Parts{
      {Interval(a / (b + t), (a + lt) / (b + t - lt)),
       Interval(a / (b + lt), (a + lt) / b),
       Interval((a + t - lt) / (b + t), (a + t) / (b + t - lt)),
       Interval((a + t - lt) / (b + lt), (a + t) / b)},
      Interval(a / (b + t), (a + t) / b)};
}

bool key2_check(const Rational& lambda, const Interval& i, const Interval& j) {
  const auto k = key2_subintervals(lambda, i, j);
  const auto u = normalize_union({k.parts.begin(), k.parts.end()});
  return u.size() == 1 && u[0] == k.full;
}

Key2WindowReport key2_window_check(const Rational& lambda, int n, int max_depth) {
  const CantorParams p(lambda);
  Key2WindowReport report;
  const Rational left = Rational(1) - lambda;
  for (int depth = 1; depth <= n; ++depth) {
    const auto g = window_gn(p, left, Rational(1), depth, max_depth);
    report.depth_checked = depth;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x; y < g.size(); ++y) {
        ++report.pairs_checked;
        if (!key2_check(lambda, g[x], g[y])) {
          report.first_failing_depth = depth;
          report.failing_pair.emplace(g[x], g[y]);
          return report;
        }
      }
    }
  }
  return report;
}

IntervalSet quotient_core_cover(const Rational& lambda, int n, int max_depth) {
  const CantorParams p(lambda);
  if (n < 1) throw Error(ErrorCode::OutOfRange, "quotient cover needs depth n >= 1");
  if (2 * (n - 1) > max_depth) {
    throw Error(ErrorCode::DepthBudgetExceeded,
                "quotient cover at depth " + std::to_string(n) + " needs 4^" + std::to_string(n - 1) +
                    " pair quotients, over the budget 2^" + std::to_string(max_depth));
  }
  const auto g = window_gn(p, Rational(1) - lambda, Rational(1), n, max_depth);
  std::vector<Interval> raw;
  raw.reserve(g.size() * g.size());
  for (const auto& num : g) {
    for (const auto& den : g) raw.push_back(interval_quotient(num, den));
  }
  return normalize_union(std::move(raw));
}

namespace {

Interval hull_core(const Rational& lambda) {
  const Rational left = Rational(1) - lambda;
  return Interval(left, left.reciprocal());
}

// alpha = lambda^k * beta with beta in (lambda U, U], U = 1/(1 - lambda).
struct ScalePosition {
  long k = 0;
  Rational beta;
};

ScalePosition bracket_scale(const Rational& lambda, const Rational& alpha) {
  const Rational upper = (Rational(1) - lambda).reciprocal();
  const Rational lower = lambda * upper;
  ScalePosition pos{0, alpha};
  while (pos.beta > upper) {
    pos.beta *= lambda;
    --pos.k;
  }
  while (pos.beta <= lower) {
    pos.beta /= lambda;
    ++pos.k;
  }
  return pos;
}

Interval scaled(const Interval& iv, const Rational& lambda, long k) {
  const Rational f = lambda.pow(k);
  return Interval(iv.lo() * f, iv.hi() * f);
}

}  // namespace

RatioSetStructure ratio_set_structure(const Rational& lambda, long k_window, int n, int max_depth) {
  const CantorParams p(lambda);
  if (k_window < 0) throw Error(ErrorCode::OutOfRange, "k_window must be >= 0");
  RatioSetStructure s;
  s.k_min = -k_window;
  s.k_max = k_window;
  s.exact = lambda >= Rational(1, 3);
  s.core = s.exact ? IntervalSet(hull_core(lambda)) : quotient_core_cover(lambda, n, max_depth);
  const Interval hull = hull_core(lambda);
  // Copy k and k+1 are disjoint iff lambda U < 1 - lambda.
  s.copies_disjoint = lambda * hull.hi() < hull.lo();
  std::vector<Interval> all;
  for (long k = s.k_min; k <= s.k_max; ++k) {
    auto c = affine_image(s.core, lambda.pow(k), Rational(0));
    all.insert(all.end(), c.begin(), c.end());
    s.copies.emplace_back(k, std::move(c));
  }
  s.copies_union = normalize_union(std::move(all));
  return s;
}

VisibilityAnswer visible_query(const Rational& lambda, const Rational& alpha, int n, int max_depth) {
  const CantorParams p(lambda);
  if (alpha.sign() < 0) {
    throw Error(ErrorCode::NegativeSlope, "slope alpha = " + alpha.str() + " is negative");
  }
  VisibilityAnswer out;
  if (alpha.is_zero()) {
    out.answer = Visibility::NotVisible;
    out.reason = "zero-slope";
    out.witness.emplace(Rational(0), Rational(1));
    return out;
  }
  const Interval hull = hull_core(lambda);
  const ScalePosition pos = bracket_scale(lambda, alpha);
  out.scale = pos.k;
  if (pos.beta < hull.lo()) {
    // Between copy k+1 and copy k: no ratio of K lies here in any regime.
    out.answer = Visibility::Visible;
    out.reason = "scale-gap";
    out.gap = Interval(lambda.pow(pos.k + 1) * hull.hi(), lambda.pow(pos.k) * hull.lo());
    return out;
  }
  if (lambda >= Rational(1, 3)) {
    out.answer = Visibility::NotVisible;
    out.reason = "scale-core";
    out.copy = scaled(hull, lambda, pos.k);
    return out;
  }

  // Endpoint witness: beta = x*/y* with x*, y* basic endpoints in [1-lambda, 1].
  const auto all_ends = basic_endpoints(p, n, max_depth);
  std::vector<Rational> ends;
  std::copy_if(all_ends.begin(), all_ends.end(), std::back_inserter(ends),
               [&](const Rational& e) { return e >= hull.lo(); });
  for (const auto& y : ends) {
    const Rational x = pos.beta * y;
    if (x > Rational(1)) break;
    if (std::binary_search(ends.begin(), ends.end(), x)) {
      out.answer = Visibility::NotVisible;
      out.reason = "endpoint-ratio";
      const Rational sx = pos.k > 0 ? lambda.pow(pos.k) : Rational(1);
      const Rational sy = pos.k < 0 ? lambda.pow(-pos.k) : Rational(1);
      out.witness.emplace(x * sx, y * sy);
      return out;
    }
  }

  const auto cover = quotient_core_cover(lambda, n, max_depth);
  if (!cover.contains(pos.beta)) {
    for (const auto& g : gaps_within(hull, cover)) {
      if (g.contains(pos.beta)) {
        out.answer = Visibility::Visible;
        out.reason = "cover-gap";
        out.gap = scaled(g, lambda, pos.k);
        return out;
      }
    }
  }
  out.answer = Visibility::UnknownAtDepth;
  out.reason = "inside-cover";
  return out;
}

VisibleSet visible_set(const Rational& lambda, long k_window, int n, int max_depth) {
  VisibleSet v;
  v.regime = regime_classify(lambda);
  if (k_window < 0) throw Error(ErrorCode::OutOfRange, "k_window must be >= 0");
  if (v.regime.tag == RegimeTag::Regime1_Vempty) {
    v.regime_unsupported = true;
    v.exact = true;
    return v;
  }
  v.exact = v.regime.tag == RegimeTag::Regime2_ExactGaps;
  const Interval hull = hull_core(lambda);
  std::vector<Interval> raw;
  for (long k = -k_window + 1; k <= k_window; ++k) {
    raw.emplace_back(lambda.pow(k) * hull.hi(), lambda.pow(k - 1) * hull.lo());
  }
  if (!v.exact) {
    const auto cover = quotient_core_cover(lambda, n, max_depth);
    const auto inner = gaps_within(hull, cover);
    for (long k = -k_window; k <= k_window; ++k) {
      for (const auto& g : inner) raw.push_back(scaled(g, lambda, k));
    }
  }
  v.gaps = normalize_union(std::move(raw));
  return v;
}

bool thickness_condition(const Rational& lambda) {
  const CantorParams checked(lambda);
  const Rational gap = Rational(1) - Rational(2) * lambda;
  return lambda * lambda > lambda * gap * gap;
}

}  // namespace cantorvis
