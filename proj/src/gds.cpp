#include "cantorvis/gds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cantorvis/error.hpp"

namespace cantorvis {

std::string_view to_string(Separation s) {
  return s == Separation::StrongSeparation ? "StrongSeparation" : "OpenSetCondition";
}

GraphDirectedSystem make_gds(std::vector<Interval> states, std::vector<GdsEdge> edges, Rational ratio,
                             Separation separation) {
  GraphDirectedSystem g;
  g.states = std::move(states);
  g.edges = std::move(edges);
  g.ratio = std::move(ratio);
  g.separation = separation;
  g.adjacency.assign(g.states.size(), std::vector<std::uint64_t>(g.states.size(), 0));
  for (const auto& e : g.edges) ++g.adjacency.at(e.from).at(e.to);
  return g;
}

GraphDirectedSystem build_survivor_gds(std::span<const LabeledMap> maps, const Interval& domain,
                                       const IntervalSet& hole, const std::set<Rational>& cuts,
                                       Separation separation) {
  std::set<Rational> points{domain.lo(), domain.hi()};
  for (const auto& h : hole) {
    points.insert(h.lo());
    points.insert(h.hi());
  }
  points.insert(cuts.begin(), cuts.end());
  std::vector<Rational> sorted;
  for (const auto& c : points) {
    if (domain.contains(c)) sorted.push_back(c);
  }

  std::vector<Interval> states;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const Rational mid = (sorted[i] + sorted[i + 1]) / Rational(2);
    if (!hole.contains(mid)) states.emplace_back(sorted[i], sorted[i + 1]);
  }

  std::vector<GdsEdge> edges;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (const auto& m : maps) {
      if (!m.map.image(domain).contains(states[s])) continue;
      const Interval target(m.map.invert(states[s].lo()), m.map.invert(states[s].hi()));
      if (!points.count(target.lo()) || !points.count(target.hi())) {
        throw Error(ErrorCode::ClosureNotFinite,
                    "T_" + std::to_string(m.label) + " maps state " + states[s].str() + " onto " +
                        target.str() + ", whose ends are not cut points");
      }
      for (std::size_t u = 0; u < states.size(); ++u) {
        if (target.contains(states[u])) edges.push_back({s, u, m.label, m.map.ratio()});
      }
    }
  }
  const Rational ratio = maps.empty() ? Rational(0) : maps.front().map.ratio();
  return make_gds(std::move(states), std::move(edges), ratio, separation);
}

GraphDirectedSystem build_gds(const ProjectionIfs& ifs, const std::set<Rational>& closure,
                              Separation separation, std::size_t budget) {
  const auto regions = overlap_regions(ifs);
  std::set<Rational> cuts = closure;
  for (const auto& end : {-ifs.slope_t(), Rational(1)}) {
    const auto orbit = orbit_search(ifs, regions, end, budget);
    if (!orbit.closure_complete) {
      throw Error(ErrorCode::ClosureNotFinite, "orbit of attractor end " + end.str() + " exceeds budget");
    }
    for (const auto& entry : orbit.visited) cuts.insert(entry.first);
  }
  const auto maps = ifs.distinct_maps();
  auto g = build_survivor_gds(maps, ifs.attractor(), regions.hole(), cuts, separation);
  g.ratio = ifs.lambda();
  g.warnings = regions.warnings;
  return g;
}

GraphDirectedSystem build_gds(const ProjectionIfs& ifs, std::size_t budget) {
  const auto finite = prop2_check(ifs, budget);
  if (finite.overall != Verdict::True) {
    throw Error(ErrorCode::ClosureNotFinite,
                "endpoint orbits of H did not close within budget " + std::to_string(budget));
  }
  const auto hits = prop1_check(ifs, budget);
  const auto sep =
      hits.overall == Verdict::True ? Separation::StrongSeparation : Separation::OpenSetCondition;
  return build_gds(ifs, finite.union_closure, sep, budget);
}

GdsSoundness verify_gds(const GraphDirectedSystem& g, std::span<const LabeledMap> maps,
                        const IntervalSet& hole) {
  GdsSoundness out;
  auto map_of = [&](int label) -> const IfsMap& {
    for (const auto& m : maps) {
      if (m.label == label) return m.map;
    }
    throw Error(ErrorCode::OutOfRange, "edge label " + std::to_string(label) + " has no map");
  };
  std::vector<std::vector<std::pair<Interval, int>>> images(g.states.size());
  for (const auto& e : g.edges) {
    const Interval img = map_of(e.label).image(g.states.at(e.to));
    if (!g.states.at(e.from).contains(img)) {
      out.edges_contained = false;
      out.failures.push_back("g_" + std::to_string(e.label) + " image " + img.str() + " not inside " +
                             g.states[e.from].str());
    }
    for (const auto& h : hole) {
      if (img.interiors_meet(h)) {
        out.avoids_hole = false;
        out.failures.push_back("image " + img.str() + " meets hole interior " + h.str());
      }
    }
    images[e.from].emplace_back(img, e.label);
  }
  // One map applied to two adjacent states gives images sharing an endpoint;
  // only images under different maps have to be apart.
  for (const auto& list : images) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t k = i + 1; k < list.size(); ++k) {
        const auto& [a, la] = list[i];
        const auto& [b, lb] = list[k];
        if (la == lb ? a.interiors_meet(b) : a.meets(b)) {
          out.images_disjoint = false;
          out.failures.push_back("edge images " + a.str() + " and " + b.str() + " meet");
        }
      }
    }
  }
  if (g.separation != Separation::StrongSeparation) {
    // Touching images are allowed under the open set condition.
    std::erase_if(out.failures, [](const std::string& f) { return f.rfind("edge images", 0) == 0; });
  }
  return out;
}

GdsSoundness verify_gds(const GraphDirectedSystem& g, const ProjectionIfs& ifs) {
  const auto maps = ifs.distinct_maps();
  return verify_gds(g, maps, overlap_regions(ifs).hole());
}

namespace {

std::vector<std::vector<std::size_t>> strong_components(const std::vector<std::vector<std::uint64_t>>& a) {
  const std::size_t n = a.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (a[v][w] == 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comps;
}

// Perron root of an irreducible block. A + I is primitive, so power
// iteration converges; the Collatz-Wielandt quotients bracket the root.
double perron_root(const std::vector<std::vector<std::uint64_t>>& a, const std::vector<std::size_t>& comp) {
  const std::size_t m = comp.size();
  std::vector<double> x(m, 1.0), y(m);
  double lower = 0.0, upper = 0.0;
  for (int iter = 0; iter < 1000000; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < m; ++j) s += static_cast<double>(a[comp[i]][comp[j]]) * x[j];
      y[i] = s;
    }
    lower = y[0] / x[0];
    upper = lower;
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double q = y[i] / x[i];
      lower = std::min(lower, q);
      upper = std::max(upper, q);
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
    if (upper - lower <= 1e-12 * upper) break;
  }
  return 0.5 * (lower + upper) - 1.0;
}

}  // namespace

double spectral_radius(const std::vector<std::vector<std::uint64_t>>& a) {
  double rho = 0.0;
  for (const auto& comp : strong_components(a)) {
    if (comp.size() == 1 && a[comp[0]][comp[0]] == 0) continue;  // no cycle through it
    rho = std::max(rho, perron_root(a, comp));
  }
  return rho;
}

double gds_dimension(const GraphDirectedSystem& g) {
  if (g.empty()) throw Error(ErrorCode::EmptySystem, "graph-directed system has no states");
  const double rho = spectral_radius(g.adjacency);
  if (rho <= 0.0) throw Error(ErrorCode::EmptySystem, "graph has no cycles; the attractor is empty");
  return std::log(rho) / -std::log(g.ratio.to_double());
}

}  // namespace cantorvis
