#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantorvis/interval.hpp"
#include "cantorvis/orbits.hpp"
#include "cantorvis/projection_ifs.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis {

enum class Separation { StrongSeparation, OpenSetCondition };
std::string_view to_string(Separation s);

/// Edge S -> S' labelled j: g_j maps state S' into state S.
struct GdsEdge {
  std::size_t from;
  std::size_t to;
  int label;
  Rational ratio;
};

/// Graph-directed self-similar system with interval states. Its attractor
/// family satisfies K_S = union over edges S -> S' of g_j(K_S').
struct GraphDirectedSystem {
  std::vector<Interval> states;
  std::vector<GdsEdge> edges;
  Separation separation = Separation::OpenSetCondition;
  /// adjacency[s][s'] = number of edges s -> s'.
  std::vector<std::vector<std::uint64_t>> adjacency;
  Rational ratio;
  std::vector<std::string> warnings;

  bool empty() const { return states.empty(); }
};

/// Assembles a system from explicit states and edges, filling the adjacency.
GraphDirectedSystem make_gds(std::vector<Interval> states, std::vector<GdsEdge> edges,
                             Rational ratio, Separation separation);

/// Survivor-set system of an open dynamical system: the domain is cut at
/// every point of `cuts`, at the domain ends and at the hole endpoints;
/// pieces inside the hole are dropped and the rest become states. There is
/// an edge (S -> S', j) whenever S lies in g_j(domain) and S' lies in
/// T_j(S). Throws ClosureNotFinite when some T_j(S) does not end on cut
/// points (the cut set is not forward invariant).
GraphDirectedSystem build_survivor_gds(std::span<const LabeledMap> maps, const Interval& domain,
                                       const IntervalSet& hole, const std::set<Rational>& cuts,
                                       Separation separation);

/// Survivor system of the projection IFS with hole H, cut at `closure` (the
/// union of the orbit closures of the endpoints of H) plus the orbits of the
/// attractor ends.
GraphDirectedSystem build_gds(const ProjectionIfs& ifs, const std::set<Rational>& closure,
                              Separation separation, std::size_t budget = kDefaultOrbitBudget);

/// Runs prop1/prop2 and builds the system: StrongSeparation when prop1 holds,
/// OpenSetCondition otherwise. Throws ClosureNotFinite unless prop2 is True.
GraphDirectedSystem build_gds(const ProjectionIfs& ifs, std::size_t budget = kDefaultOrbitBudget);

struct GdsSoundness {
  bool edges_contained = true;
  bool avoids_hole = true;
  bool images_disjoint = true;
  std::vector<std::string> failures;

  /// Containment and hole avoidance always; disjointness under StrongSeparation.
  bool ok(Separation s) const {
    return edges_contained && avoids_hole && (s != Separation::StrongSeparation || images_disjoint);
  }
};

GdsSoundness verify_gds(const GraphDirectedSystem& g, std::span<const LabeledMap> maps,
                        const IntervalSet& hole);
GdsSoundness verify_gds(const GraphDirectedSystem& g, const ProjectionIfs& ifs);

/// Spectral radius of a nonnegative integer matrix: the largest Perron root
/// over its strongly connected components, each by power iteration on
/// (A_c + I) until the Collatz-Wielandt bounds agree to 1e-12.
double spectral_radius(const std::vector<std::vector<std::uint64_t>>& a);

/// log rho(A) / -log(ratio). Throws EmptySystem for an empty graph or one
/// without cycles.
double gds_dimension(const GraphDirectedSystem& g);

}  // namespace cantorvis
