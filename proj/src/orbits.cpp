#include "cantorvis/orbits.hpp"

#include <deque>

#include "cantorvis/error.hpp"

namespace cantorvis {

std::string_view to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::FiniteClosure: return "FiniteClosure";
    case OrbitStatus::HitsHole: return "HitsHole";
    case OrbitStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "True";
    case Verdict::False: return "False";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

OrbitClosure orbit_search(const ProjectionIfs& ifs, const OverlapRegions& regions, const Rational& x,
                          std::size_t budget, bool stop_at_hole) {
  if (!ifs.attractor().contains(x)) {
    throw Error(ErrorCode::OutOfAttractor, x.str() + " is outside " + ifs.attractor().str());
  }
  const auto hole = regions.hole();
  const auto maps = ifs.distinct_maps();
  OrbitClosure out;
  out.start = x;
  out.visited.emplace(x, Coding{{}, 4});
  std::deque<Rational> queue{x};
  bool truncated = false;
  while (!queue.empty() && !truncated) {
    const Rational y = queue.front();
    queue.pop_front();
    const Coding word = out.visited.at(y);
    for (const auto& m : maps) {
      if (!ifs.image(m.label).contains(y)) continue;
      Rational z = m.map.invert(y);
      Coding next = word;
      next.digits.push_back(static_cast<std::uint8_t>(m.label));
      if (!out.witness_to_hole && z != x && hole.contains(z)) {
        out.witness_to_hole = next;
        out.hole_point = z;
        if (stop_at_hole) truncated = true;
      }
      if (out.visited.count(z)) continue;
      if (truncated || out.visited.size() >= budget) {
        truncated = true;
        break;
      }
      out.visited.emplace(z, std::move(next));
      queue.push_back(std::move(z));
    }
  }
  out.closure_complete = !truncated;
  if (out.witness_to_hole) {
    out.status = OrbitStatus::HitsHole;
  } else {
    out.status = truncated ? OrbitStatus::BudgetExceeded : OrbitStatus::FiniteClosure;
  }
  return out;
}

OrbitClosure orbit_search(const ProjectionIfs& ifs, const Rational& x, std::size_t budget) {
  return orbit_search(ifs, overlap_regions(ifs), x, budget);
}

namespace {

EndpointCheckReport endpoint_reports(const ProjectionIfs& ifs, std::size_t budget, bool stop_at_hole) {
  const auto regions = overlap_regions(ifs);
  EndpointCheckReport rep;
  rep.warnings = regions.warnings;
  for (std::size_t i = 0; i < regions.regions.size(); ++i) {
    const auto& r = regions.regions[i].region;
    const std::string idx = std::to_string(i + 1);
    for (const auto& [name, point] : {std::pair{"a" + idx, r.lo()}, std::pair{"b" + idx, r.hi()}}) {
      auto orbit = orbit_search(ifs, regions, point, budget, stop_at_hole);
      for (const auto& entry : orbit.visited) rep.union_closure.insert(entry.first);
      rep.endpoints.push_back({name, point, std::move(orbit)});
    }
  }
  return rep;
}

}  // namespace

EndpointCheckReport prop1_check(const ProjectionIfs& ifs, std::size_t budget) {
  auto rep = endpoint_reports(ifs, budget, true);
  bool unknown = false;
  for (const auto& e : rep.endpoints) {
    if (e.orbit.status == OrbitStatus::FiniteClosure) {
      rep.overall = Verdict::False;
      rep.first_failing = e.name;
      return rep;
    }
    if (e.orbit.status == OrbitStatus::BudgetExceeded) unknown = true;
  }
  rep.overall = unknown ? Verdict::Unknown : Verdict::True;
  return rep;
}

EndpointCheckReport prop2_check(const ProjectionIfs& ifs, std::size_t budget) {
  auto rep = endpoint_reports(ifs, budget, false);
  rep.overall = Verdict::True;
  for (const auto& e : rep.endpoints) {
    if (!e.orbit.closure_complete) rep.overall = Verdict::Unknown;
  }
  return rep;
}

}  // namespace cantorvis
