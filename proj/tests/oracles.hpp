#pragma once

// Brute-force references used by the tests. They only touch Rational and
// plain pairs so they stay independent of the code paths under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cantorvis/rational.hpp"

namespace oracle {

using cantorvis::Rational;
using Span = std::pair<Rational, Rational>;

/// f_w([0,1]) by composing lambda x + d (1 - lambda) from the innermost digit.
inline Span cantor_cell(const Rational& lam, const std::vector<int>& digits) {
  Rational lo(0), hi(1);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const Rational shift = *it == 2 ? Rational(1) - lam : Rational(0);
    lo = lam * lo + shift;
    hi = lam * hi + shift;
  }
  return {lo, hi};
}

/// All words over {1..k} of length n.
inline std::vector<std::vector<int>> words(int k, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int d = 1; d <= k; ++d) {
        auto v = w;
        v.push_back(d);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Span> cantor_cells(const Rational& lam, int n) {
  std::vector<Span> out;
  for (const auto& w : words(2, n)) out.push_back(cantor_cell(lam, w));
  std::sort(out.begin(), out.end());
  return out;
}

/// Sort and merge closed spans that overlap or touch.
inline std::vector<Span> merge(std::vector<Span> v) {
  std::sort(v.begin(), v.end());
  std::vector<Span> out;
  for (auto& s : v) {
    if (!out.empty() && s.first <= out.back().second) {
      out.back().second = cantorvis::max(out.back().second, s.second);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

/// Union of x/y over rank-n cells inside [1 - lambda, 1], from the corner
/// formula [a/(b+t), (a+t)/b] for positive cells.
inline std::vector<Span> quotient_cover(const Rational& lam, int n) {
  std::vector<Span> cells;
  for (const auto& c : cantor_cells(lam, n)) {
    if (c.first >= Rational(1) - lam) cells.push_back(c);
  }
  std::vector<Span> q;
  for (const auto& x : cells) {
    for (const auto& y : cells) q.emplace_back(x.first / y.second, x.second / y.first);
  }
  return merge(std::move(q));
}

/// Maps g_1..g_4 of the projection IFS as (ratio, shift).
inline std::vector<Span> projection_maps(const Rational& lam, const Rational& t) {
  const Rational m = Rational(1) - lam;
  return {{lam, -(m * t)}, {lam, m * (Rational(1) - t)}, {lam, Rational(0)}, {lam, m}};
}

/// Number of words w of length n with a in g_w([-t, 1]), by full enumeration.
inline std::uint64_t coding_count(const Rational& lam, const Rational& t, const Rational& a, int n) {
  const auto maps = projection_maps(lam, t);
  std::uint64_t count = 0;
  for (const auto& w : words(4, n)) {
    Rational lo = -t, hi(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& [r, c] = maps[static_cast<std::size_t>(*it - 1)];
      lo = r * lo + c;
      hi = r * hi + c;
    }
    if (lo <= a && a <= hi) ++count;
  }
  return count;
}

/// Uniform rational p/q with q = den and p drawn so that lo <= p/q < hi.
inline Rational uniform_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long den) {
  const Rational dl = lo * Rational(den);
  const Rational dh = hi * Rational(den);
  const long first = static_cast<long>(dl.floor().to_double()) + (dl.is_integer() ? 0 : 1);
  long last = static_cast<long>(dh.floor().to_double());
  if (dh.is_integer()) --last;
  std::uniform_int_distribution<long> pick(first, std::max(first, last));
  return Rational(pick(rng), den);
}

}  // namespace oracle
