#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cantorvis/cantor_ifs.hpp"
#include "cantorvis/projection_ifs.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

inline constexpr std::size_t kDefaultOrbitBudget = 100000;

enum class OrbitStatus { FiniteClosure, HitsHole, BudgetExceeded };
std::string_view to_string(OrbitStatus s);

/// Breadth-first closure of a point under every admissible inverse branch
/// T_j = g_j^{-1}.
struct OrbitClosure {
  Rational start;
  /// Each visited point with the shortest (then lexicographically first)
  /// word w such that T_w(start) is that point.
  std::map<Rational, Coding> visited;
  /// Shortest nonempty w with T_w(start) in H and T_w(start) != start.
  std::optional<Coding> witness_to_hole;
  std::optional<Rational> hole_point;
  OrbitStatus status = OrbitStatus::BudgetExceeded;
  /// The whole closure was explored within the budget.
  bool closure_complete = false;
};

/// Throws OutOfAttractor. Uses the distinct maps of `ifs`; `budget` caps the
/// number of visited points. With `stop_at_hole` the search ends at the first
/// witness, leaving the closure incomplete.
OrbitClosure orbit_search(const ProjectionIfs& ifs, const OverlapRegions& regions, const Rational& x,
                          std::size_t budget = kDefaultOrbitBudget, bool stop_at_hole = false);
OrbitClosure orbit_search(const ProjectionIfs& ifs, const Rational& x,
                          std::size_t budget = kDefaultOrbitBudget);

enum class Verdict { True, False, Unknown };
std::string_view to_string(Verdict v);

struct EndpointReport {
  std::string name;  // a1, b1, a2, ...
  Rational point;
  OrbitClosure orbit;
};

struct EndpointCheckReport {
  Verdict overall = Verdict::Unknown;
  std::vector<EndpointReport> endpoints;
  /// First endpoint (in a1, b1, a2, ... order) that settles a False verdict.
  std::optional<std::string> first_failing;
  /// Union of all endpoint closures.
  std::set<Rational> union_closure;
  std::vector<std::string> warnings;
};

/// Every endpoint of H re-enters H along some branch word: True when all
/// six endpoints have witnesses, False when some endpoint's complete closure
/// has none, Unknown when the budget ran out first.
EndpointCheckReport prop1_check(const ProjectionIfs& ifs, std::size_t budget = kDefaultOrbitBudget);

/// Every orbit of every endpoint of H is finite: True when all closures
/// saturate within the budget, otherwise Unknown (never certified False).
EndpointCheckReport prop2_check(const ProjectionIfs& ifs, std::size_t budget = kDefaultOrbitBudget);

}  // namespace cantorvis
