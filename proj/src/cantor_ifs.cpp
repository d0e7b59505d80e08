#include "cantorvis/cantor_ifs.hpp"

#include "cantorvis/error.hpp"

namespace cantorvis {

IfsMap::IfsMap(Rational ratio, Rational shift) : ratio_(std::move(ratio)), shift_(std::move(shift)) {
  if (ratio_.sign() <= 0 || ratio_ >= Rational(1)) {
    throw Error(ErrorCode::OutOfRange, "contraction ratio " + ratio_.str() + " not in (0,1)");
  }
}

Interval IfsMap::image(const Interval& iv) const { return Interval(apply(iv.lo()), apply(iv.hi())); }

std::string Coding::str() const {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

Coding Coding::parse(std::string_view text, int alphabet) {
  Coding c{{}, alphabet};
  for (char ch : text) {
    const int d = ch - '0';
    if (d < 1 || d > alphabet) {
      throw Error(ErrorCode::ParseError, "digit '" + std::string(1, ch) +
                                             "' outside alphabet 1.." + std::to_string(alphabet));
    }
    c.digits.push_back(static_cast<std::uint8_t>(d));
  }
  return c;
}

CantorParams::CantorParams(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_.sign() <= 0 || lambda_ >= Rational(1, 2)) {
    throw Error(ErrorCode::OutOfRange, "lambda = " + lambda_.str() + " must satisfy 0 < lambda < 1/2");
  }
  maps_.emplace_back(lambda_, Rational(0));
  maps_.emplace_back(lambda_, Rational(1) - lambda_);
}

Interval basic_interval(const CantorParams& p, const Coding& w) {
  Interval iv(Rational(0), Rational(1));
  for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) iv = p.map(*it).image(iv);
  return iv;
}

std::size_t basic_interval_count(int n, int max_depth) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative depth");
  if (n > max_depth || n >= 63) {
    throw Error(ErrorCode::DepthBudgetExceeded,
                "depth " + std::to_string(n) + " exceeds budget " + std::to_string(max_depth));
  }
  return std::size_t{1} << n;
}

namespace {

// Left endpoints of the rank-n intervals, in increasing order. Images under
// f_1 all precede those under f_2, so concatenation keeps the order.
std::vector<Rational> left_endpoints(const CantorParams& p, int n, int max_depth) {
  std::vector<Rational> lefts;
  lefts.reserve(basic_interval_count(n, max_depth));
  lefts.emplace_back(0);
  const Rational& lam = p.lambda();
  const Rational step = Rational(1) - lam;
  for (int level = 0; level < n; ++level) {
    const std::size_t m = lefts.size();
    for (std::size_t i = 0; i < m; ++i) lefts[i] *= lam;
    for (std::size_t i = 0; i < m; ++i) lefts.push_back(lefts[i] + step);
  }
  return lefts;
}

}  // namespace

IntervalSet basic_intervals(const CantorParams& p, int n, int max_depth) {
  const auto lefts = left_endpoints(p, n, max_depth);
  const Rational len = p.lambda().pow(n);
  std::vector<Interval> parts;
  parts.reserve(lefts.size());
  for (const auto& a : lefts) parts.emplace_back(a, a + len);
  return normalize_union(std::move(parts));
}

std::vector<Rational> basic_endpoints(const CantorParams& p, int n, int max_depth) {
  const auto lefts = left_endpoints(p, n, max_depth);
  const Rational len = p.lambda().pow(n);
  std::vector<Rational> out;
  out.reserve(2 * lefts.size());
  for (const auto& a : lefts) {
    out.push_back(a);
    out.push_back(a + len);
  }
  return out;
}

IntervalSet refine_tilde(const CantorParams& p, const Interval& iv) {
  const Rational& lam = p.lambda();
  const Rational t = iv.length();
  return normalize_union({Interval(iv.lo(), iv.lo() + lam * t),
                          Interval(iv.hi() - lam * t, iv.hi())});
}

namespace {

// One inverse step of the Cantor IFS, or nothing inside the middle gap.
std::optional<Rational> inverse_step(const CantorParams& p, const Rational& x) {
  const Rational& lam = p.lambda();
  if (x.sign() >= 0 && x <= lam) return x / lam;
  const Rational one_minus = Rational(1) - lam;
  if (x >= one_minus && x <= Rational(1)) return (x - one_minus) / lam;
  return std::nullopt;
}

std::optional<int> endpoint_rank(const CantorParams& p, Rational x, int n, const Rational& target) {
  for (int k = 0; k <= n; ++k) {
    if (x == target) return k;
    if (k == n) break;
    auto next = inverse_step(p, x);
    if (!next) return std::nullopt;
    x = std::move(*next);
  }
  return std::nullopt;
}

void collect_window(const CantorParams& p, const Interval& iv, int remaining, const Interval& window,
                    std::vector<Interval>& out) {
  if (!iv.meets(window)) return;
  if (remaining == 0) {
    if (window.contains(iv)) out.push_back(iv);
    return;
  }
  // Children of f_w[0,1] are f_w f_1[0,1] and f_w f_2[0,1], its two end pieces.
  for (const auto& child : refine_tilde(p, iv)) collect_window(p, child, remaining - 1, window, out);
}

}  // namespace

std::optional<int> left_endpoint_rank(const CantorParams& p, const Rational& x, int n) {
  return endpoint_rank(p, x, n, Rational(0));
}

std::optional<int> right_endpoint_rank(const CantorParams& p, const Rational& x, int n) {
  return endpoint_rank(p, x, n, Rational(1));
}

IntervalSet window_gn(const CantorParams& p, const Rational& a, const Rational& b, int n,
                      int max_depth) {
  basic_interval_count(n, max_depth);
  if (!(a < b)) {
    throw Error(ErrorCode::NotBasicEndpoints, "window needs A < B, got A=" + a.str() + " B=" + b.str());
  }
  if (!left_endpoint_rank(p, a, n)) {
    throw Error(ErrorCode::NotBasicEndpoints,
                a.str() + " is not a left endpoint of a basic interval of rank <= " + std::to_string(n));
  }
  if (!right_endpoint_rank(p, b, n)) {
    throw Error(ErrorCode::NotBasicEndpoints,
                b.str() + " is not a right endpoint of a basic interval of rank <= " + std::to_string(n));
  }
  std::vector<Interval> parts;
  collect_window(p, Interval(Rational(0), Rational(1)), n, Interval(a, b), parts);
  return normalize_union(std::move(parts));
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::UnknownAtDepth: return "UnknownAtDepth";
  }
  return "?";
}

Membership membership(const CantorParams& p, const Rational& x0, int n) {
  Rational x = x0;
  for (int k = 0; k <= n; ++k) {
    if (x.sign() < 0 || x > Rational(1)) return Membership::Out;
    if (x.is_zero() || x == Rational(1)) return Membership::In;
    if (k == n) break;
    auto next = inverse_step(p, x);
    if (!next) return Membership::Out;
    x = std::move(*next);
  }
  return Membership::UnknownAtDepth;
}

}  // namespace cantorvis
