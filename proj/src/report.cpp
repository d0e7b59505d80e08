#include "cantorvis/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cantorvis::report {

json exact(const Rational& r) { return r.str(); }

json exact(const Interval& iv) { return json::array({iv.lo().str(), iv.hi().str()}); }

json exact(const IntervalSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(exact(p));
  return out;
}

json approx(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

json approx(const Rational& r) { return approx(r.to_double()); }

json approx(const Interval& iv) { return json::array({approx(iv.lo()), approx(iv.hi())}); }

json gds_to_json(const GraphDirectedSystem& g) {
  json states = json::array();
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    states.push_back({{"id", i}, {"interval", exact(g.states[i])}, {"interval_approx", approx(g.states[i])}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"map", "g" + std::to_string(e.label)},
                     {"ratio", exact(e.ratio)}});
  }
  return {{"states", states},
          {"edges", edges},
          {"adjacency", g.adjacency},
          {"separation", std::string(to_string(g.separation))},
          {"ratio", exact(g.ratio)},
          {"warnings", g.warnings}};
}

std::string gds_to_dot(const GraphDirectedSystem& g) {
  std::ostringstream os;
  os << "digraph gds {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    os << "  s" << i << " [label=\"S" << i << " " << g.states[i].str() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  s" << e.from << " -> s" << e.to << " [label=\"g" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string interval_set_svg(const IntervalSet& s, std::string_view title) {
  constexpr double width = 800.0;
  constexpr double margin = 40.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * margin
     << "\" height=\"120\" viewBox=\"0 0 " << width + 2 * margin << " 120\">\n";
  os << "  <text x=\"" << margin << "\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" << title
     << "</text>\n";
  if (!s.empty()) {
    const double lo = s.hull().lo().to_double();
    const double hi = s.hull().hi().to_double();
    const double span = hi > lo ? hi - lo : 1.0;
    os << "  <line x1=\"" << margin << "\" y1=\"80\" x2=\"" << margin + width
       << "\" y2=\"80\" stroke=\"#888\"/>\n";
    for (const auto& p : s) {
      const double x0 = margin + width * (p.lo().to_double() - lo) / span;
      const double x1 = margin + width * (p.hi().to_double() - lo) / span;
      os << "  <rect x=\"" << x0 << "\" y=\"50\" width=\"" << std::max(x1 - x0, 0.5)
         << "\" height=\"24\" fill=\"#2b6cb0\"><title>" << p.str() << "</title></rect>\n";
    }
    os << "  <text x=\"" << margin << "\" y=\"100\" font-family=\"monospace\" font-size=\"11\">"
       << s.hull().lo().str() << "</text>\n";
    os << "  <text x=\"" << margin + width << "\" y=\"100\" text-anchor=\"end\" font-family=\"monospace\" "
          "font-size=\"11\">"
       << s.hull().hi().str() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cantorvis::report
