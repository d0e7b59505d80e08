#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cantorvis/gds.hpp"
#include "cantorvis/interval.hpp"
#include "cantorvis/rational.hpp"

namespace cantorvis::report {

using json = nlohmann::json;

/// Exact fields are always "p/q" strings; floating point only appears in
/// fields named *_approx, rounded to 12 significant digits.
json exact(const Rational& r);
json exact(const Interval& iv);
json exact(const IntervalSet& s);
json approx(double x);
json approx(const Rational& r);
json approx(const Interval& iv);

json gds_to_json(const GraphDirectedSystem& g);
std::string gds_to_dot(const GraphDirectedSystem& g);

/// Horizontal bar chart of an interval set.
std::string interval_set_svg(const IntervalSet& s, std::string_view title);

}  // namespace cantorvis::report
