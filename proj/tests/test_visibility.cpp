#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorvis/error.hpp"
#include "cantorvis/visibility.hpp"
#include "oracles.hpp"

using namespace cantorvis;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
Interval iv(const char* a, const char* b) { return Interval(q(a), q(b)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

std::vector<Interval> as_intervals(const std::vector<oracle::Span>& spans) {
  std::vector<Interval> out;
  for (const auto& [lo, hi] : spans) out.emplace_back(lo, hi);
  return out;
}

}  // namespace

TEST_CASE("key2_subintervals at lambda 1/3, I = J = [2/3, 1]") {
  const auto k = key2_subintervals(q("1/3"), iv("2/3", "1"), iv("2/3", "1"));
  CHECK(k.parts[0] == iv("2/3", "7/8"));
  CHECK(k.parts[1] == iv("6/7", "7/6"));
  CHECK(k.parts[2] == iv("8/9", "9/8"));
  CHECK(k.parts[3] == iv("8/7", "3/2"));
  CHECK(k.full == iv("2/3", "3/2"));
  CHECK(k.parts[0].hi() - k.parts[1].lo() == q("1/56"));
}

TEST_CASE("key2 errors") {
  CHECK(code_of([] { key2_subintervals(Rational(1, 3), Interval(Rational(2, 3), Rational(1)),
                                       Interval(Rational(2, 3), Rational(7, 9))); }) ==
        ErrorCode::LengthMismatch);
  CHECK(code_of([] { key2_subintervals(Rational(1, 3), Interval(Rational(1), Rational(1)),
                                       Interval(Rational(1), Rational(1))); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { key2_subintervals(Rational(1, 3), Interval(Rational(-1), Rational(0)),
                                       Interval(Rational(-1), Rational(0))); }) ==
        ErrorCode::NonPositiveDenominator);
}

TEST_CASE("key2_check examples") {
  CHECK(key2_check(q("1/3"), iv("2/3", "1"), iv("2/3", "1")));
  CHECK_FALSE(key2_check(q("1/5"), iv("4/5", "1"), iv("4/5", "1")));
  const Rational lam = q("2/5");
  const auto g = window_gn(CantorParams(lam), Rational(1) - lam, Rational(1), 2);
  REQUIRE(g.size() == 2);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = x; y < g.size(); ++y) CHECK(key2_check(lam, g[x], g[y]));
}

TEST_CASE("key2 pieces are the quotients of the refined pieces") {
  for (const char* lam_s : {"1/3", "2/5", "1/5", "3/10"}) {
    const Rational lam = q(lam_s);
    CantorParams p(lam);
    const auto g = window_gn(p, Rational(1) - lam, Rational(1), 3);
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x; y < g.size(); ++y) {
        const auto k = key2_subintervals(lam, g[x], g[y]);
        const auto ri = refine_tilde(p, g[x]);
        const auto rj = refine_tilde(p, g[y]);
        CHECK(k.parts[0] == interval_quotient(ri[0], rj[1]));
        CHECK(k.parts[1] == interval_quotient(ri[0], rj[0]));
        CHECK(k.parts[2] == interval_quotient(ri[1], rj[1]));
        CHECK(k.parts[3] == interval_quotient(ri[1], rj[0]));
        CHECK(k.full == interval_quotient(g[x], g[y]));
      }
    }
  }
}

TEST_CASE("key2_window_check") {
  const auto good = key2_window_check(q("1/3"), 5);
  CHECK(good.depth_checked == 5);
  CHECK_FALSE(good.first_failing_depth.has_value());
  const auto bad = key2_window_check(q("1/5"), 5);
  CHECK(bad.first_failing_depth == 1);
  REQUIRE(bad.failing_pair.has_value());
  CHECK(bad.failing_pair->first == iv("4/5", "1"));
}

TEST_CASE("quotient_core_cover examples") {
  CHECK(quotient_core_cover(q("1/3"), 1).parts() == std::vector<Interval>{iv("2/3", "3/2")});
  CHECK(quotient_core_cover(q("1/3"), 5).parts() == std::vector<Interval>{iv("2/3", "3/2")});
  const auto c = quotient_core_cover(q("1/5"), 2);
  CHECK(c.parts() == std::vector<Interval>{iv("4/5", "7/8"), iv("20/21", "21/20"), iv("8/7", "5/4")});
  CHECK(c.total_length() == q("47/168"));
  CHECK(c.total_length() < q("5/4") - q("4/5"));
  CHECK(code_of([] { quotient_core_cover(Rational(1, 5), 0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { quotient_core_cover(Rational(1, 5), 6, 9); }) == ErrorCode::DepthBudgetExceeded);
}

TEST_CASE("oracle: quotient cover matches corner-formula enumeration") {
  for (const char* lam : {"1/5", "1/4", "3/10", "1/3", "2/5", "1/9"}) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(lam);
      CAPTURE(n);
      CHECK(quotient_core_cover(q(lam), n).parts() == as_intervals(oracle::quotient_cover(q(lam), n)));
    }
  }
}

TEST_CASE("property: covers are nested and lengths nonincreasing") {
  for (const char* lam : {"1/5", "1/4", "3/10", "2/7"}) {
    IntervalSet prev = quotient_core_cover(q(lam), 1);
    for (int n = 2; n <= 6; ++n) {
      const auto cur = quotient_core_cover(q(lam), n);
      CHECK(is_subset(cur, prev));
      CHECK(cur.total_length() <= prev.total_length());
      prev = cur;
    }
  }
}

TEST_CASE("property: endpoint ratios stay inside the outer cover") {
  for (const char* lam_s : {"1/5", "1/4", "3/10", "7/20"}) {
    const Rational lam = q(lam_s);
    CantorParams p(lam);
    for (int n = 1; n <= 5; ++n) {
      const auto cover = quotient_core_cover(lam, n);
      std::vector<Rational> ends;
      for (const auto& e : basic_endpoints(p, n))
        if (e >= Rational(1) - lam) ends.push_back(e);
      for (const auto& x : ends)
        for (const auto& y : ends) CHECK(cover.contains(x / y));
    }
  }
}

TEST_CASE("property: scale decomposition") {
  for (const char* lam_s : {"1/3", "7/20", "1/5"}) {
    const Rational lam = q(lam_s);
    CantorParams p(lam);
    const auto core = quotient_core_cover(lam, 1);
    const std::vector<Rational> stars{Rational(1) - lam, Rational(1)};
    for (long m = 0; m <= 4; ++m) {
      for (long n = 0; n <= 4; ++n) {
        for (const auto& xs : stars) {
          for (const auto& ys : stars) {
            const Rational x = lam.pow(m) * xs, y = lam.pow(n) * ys;
            CHECK(membership(p, x, 8) == Membership::In);
            CHECK(affine_image(core, lam.pow(m - n), Rational(0)).contains(x / y));
          }
        }
      }
    }
  }
}

TEST_CASE("regime_classify") {
  CHECK(regime_classify(q("2/5")).tag == RegimeTag::Regime1_Vempty);
  CHECK(regime_classify(q("19/50")).tag == RegimeTag::Regime2_ExactGaps);
  CHECK(regime_classify(q("381/1000")).tag == RegimeTag::Regime2_ExactGaps);
  CHECK(regime_classify(q("382/1000")).tag == RegimeTag::Regime1_Vempty);
  CHECK(regime_classify(q("7/20")).tag == RegimeTag::Regime2_ExactGaps);
  CHECK(golden_polynomial(q("7/20")) == q("29/400"));
  CHECK(golden_polynomial(q("19/50")) == q("11/2500"));
  const auto third = regime_classify(q("1/3"));
  CHECK(third.tag == RegimeTag::Regime2_ExactGaps);
  CHECK(third.at_one_third);
  CHECK(regime_classify(q("3/10")).tag == RegimeTag::Regime3a_InteriorBothSides);
  const auto quarter = regime_classify(q("1/4"));
  CHECK(quarter.tag == RegimeTag::Regime3b_NullComplement);
  CHECK(quarter.at_one_quarter);
  CHECK(regime_classify(q("1/5")).tag == RegimeTag::Regime3b_NullComplement);
  CHECK(code_of([] { regime_classify(Rational(3, 5)); }) == ErrorCode::OutOfRange);
}

TEST_CASE("property: Regime 1 iff golden polynomial nonpositive") {
  for (long d = 3; d <= 60; ++d) {
    for (long num = 1; 2 * num < d; ++num) {
      const Rational lam(num, d);
      const bool r1 = regime_classify(lam).tag == RegimeTag::Regime1_Vempty;
      CHECK(r1 == (golden_polynomial(lam).sign() <= 0));
      CHECK(r1 == (lam.to_double() >= (3.0 - std::sqrt(5.0)) / 2.0));
    }
  }
}

TEST_CASE("ratio_set_structure") {
  const auto third = ratio_set_structure(q("1/3"), 1, 4);
  CHECK(third.exact);
  CHECK(third.copies_union.parts() ==
        std::vector<Interval>{iv("2/9", "1/2"), iv("2/3", "3/2"), iv("2", "9/2")});
  CHECK(third.copies_disjoint);
  const auto r2 = ratio_set_structure(q("7/20"), 2, 4);
  CHECK(r2.copies_disjoint);
  CHECK(q("20/13") < q("13/7"));
  CHECK(r2.copies_union.size() == 5);
  const auto r1 = ratio_set_structure(q("2/5"), 3, 4);
  CHECK_FALSE(r1.copies_disjoint);
  CHECK(r1.copies_union.size() == 1);
  const auto r3 = ratio_set_structure(q("1/5"), 1, 3);
  CHECK_FALSE(r3.exact);
  CHECK(r3.core == quotient_core_cover(q("1/5"), 3));
}

TEST_CASE("visible_query examples") {
  const auto one = visible_query(q("7/20"), q("1"), 6);
  CHECK(one.answer == Visibility::NotVisible);
  REQUIRE(one.copy.has_value());
  CHECK(one.copy == iv("13/20", "20/13"));
  const auto gap = visible_query(q("7/20"), q("17/10"), 6);
  CHECK(gap.answer == Visibility::Visible);
  CHECK(gap.gap == iv("20/13", "13/7"));
  CHECK(gap.scale == -1);
  CHECK(visible_query(q("2/5"), q("17/10"), 6).answer == Visibility::NotVisible);
  CHECK(visible_query(q("1/3"), q("0"), 6).answer == Visibility::NotVisible);
  CHECK(code_of([] { visible_query(Rational(1, 3), Rational(-1), 4); }) == ErrorCode::NegativeSlope);
}

TEST_CASE("visible_query below one third") {
  const Rational lam = q("1/5");
  const auto w = visible_query(lam, q("1"), 4);
  CHECK(w.answer == Visibility::NotVisible);
  CHECK(w.reason == "endpoint-ratio");
  const auto g = visible_query(lam, q("9/10"), 4);
  CHECK(g.answer == Visibility::Visible);
  CHECK(g.reason == "cover-gap");
  REQUIRE(g.gap.has_value());
  CHECK(g.gap->contains(q("9/10")));
  CHECK(visible_query(lam, q("7/10"), 4).reason == "scale-gap");
}

TEST_CASE("property: visible_query answers are stable and witnessed") {
  std::mt19937_64 rng(99);
  for (const char* lam_s : {"1/5", "1/4", "3/10", "7/20", "1/3"}) {
    const Rational lam = q(lam_s);
    CantorParams p(lam);
    for (int trial = 0; trial < 40; ++trial) {
      const Rational alpha = oracle::uniform_rational(rng, Rational(1, 20), Rational(20), 113);
      const auto a3 = visible_query(lam, alpha, 3);
      const auto a5 = visible_query(lam, alpha, 5);
      if (a3.answer == Visibility::Visible) {
        CHECK(a5.answer == Visibility::Visible);
        REQUIRE(a3.gap.has_value());
        CHECK(a3.gap->contains(alpha));
      }
      if (a5.answer == Visibility::NotVisible) {
        CHECK((a5.copy.has_value() || a5.witness.has_value()));
        if (a5.witness) {
          const auto& [x, y] = *a5.witness;
          CHECK(x / y == alpha);
          CHECK(membership(p, x, 12) == Membership::In);
          CHECK(membership(p, y, 12) == Membership::In);
        }
        if (a5.copy) CHECK(a5.copy->contains(alpha));
      }
    }
  }
}

TEST_CASE("visible_set examples") {
  const auto third = visible_set(q("1/3"), 1, 4);
  CHECK(third.exact);
  CHECK(third.gaps.parts() == std::vector<Interval>{iv("1/2", "2/3"), iv("3/2", "2")});
  const auto r2 = visible_set(q("7/20"), 1, 4);
  CHECK(r2.gaps.parts() == std::vector<Interval>{iv("7/13", "13/20"), iv("20/13", "13/7")});
  CHECK(visible_set(q("7/20"), 0, 4).gaps.empty());
  const auto r1 = visible_set(q("2/5"), 3, 4);
  CHECK(r1.gaps.empty());
  CHECK(r1.regime_unsupported);
  const auto r3 = visible_set(q("1/5"), 1, 3);
  CHECK_FALSE(r3.exact);
  for (const auto& g : r3.gaps) {
    const Rational mid = (g.lo() + g.hi()) / Rational(2);
    CHECK(visible_query(q("1/5"), mid, 3).answer == Visibility::Visible);
  }
}

TEST_CASE("thickness_condition") {
  CHECK(thickness_condition(q("3/10")));
  CHECK_FALSE(thickness_condition(q("1/5")));
  CHECK_FALSE(thickness_condition(q("1/4")));
  CHECK(thickness_condition(q("33/100")));
}
