#include "cantorvis/cli.hpp"

#include <cmath>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "cantorvis/box_dimension.hpp"
#include "cantorvis/error.hpp"
#include "cantorvis/gds.hpp"
#include "cantorvis/orbits.hpp"
#include "cantorvis/projection_ifs.hpp"
#include "cantorvis/report.hpp"
#include "cantorvis/visibility.hpp"

namespace cantorvis::cli {

using report::approx;
using report::exact;
using report::json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "classify", "visible", "visible-set", "quotient-cover", "key2-check",
      "thickness", "boxdim",  "project",     "orbits",         "prop1",
      "prop2",     "gds",     "gds-dim",     "codings",        "slice-count"};
  return names;
}

namespace {

std::string error_json(std::string_view code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}}.dump(2) + "\n";
}

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "svg") return OutputFormat::Svg;
  if (s == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Svg: return "svg";
    case OutputFormat::Dot: return "dot";
  }
  return "?";
}

}  // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args,
                                const std::optional<std::string>& env_max_depth) {
  CLI::App app{"Exact visibility and slicing computations for products of Cantor sets", "cantorvis"};
  std::string command;
  std::string lambda, alpha, slope, point, format = "json", out;
  RunConfig cfg;
  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(commands()));
  app.add_option("--lambda", lambda, "Contraction ratio, 0 < lambda < 1/2 (p/q)");
  app.add_option("--alpha", alpha, "Slope of the line y = alpha x (p/q)");
  app.add_option("--slope-t", slope, "Projection slope t = tan(theta) > 0 (p/q)");
  app.add_option("--point", point, "Point of [-t, 1] for orbits/codings/slice-count (p/q)");
  app.add_option("--depth", cfg.depth, "Depth n")->capture_default_str();
  app.add_option("--k-window", cfg.k_window, "Scale window |k| <= K")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Orbit search node budget")->capture_default_str();
  app.add_option("--format", format, "json, csv, svg or dot")->capture_default_str();
  app.add_option("--out", out, "Write the report to FILE instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, app.help(), 0};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, error_json("ParseError", e.what()), 1};
  }

  try {
    cfg.command = command;
    if (!lambda.empty()) cfg.lambda = Rational::parse(lambda);
    if (!alpha.empty()) cfg.alpha = Rational::parse(alpha);
    if (!slope.empty()) cfg.slope_t = Rational::parse(slope);
    if (!point.empty()) cfg.point = Rational::parse(point);
    if (!out.empty()) cfg.out = out;
    const auto f = parse_format(format);
    if (!f) throw Error(ErrorCode::ParseError, "unknown format '" + format + "'");
    cfg.format = *f;
    if (env_max_depth) {
      try {
        cfg.max_depth = std::stoi(*env_max_depth);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "CANTOR_VIS_MAX_DEPTH='" + *env_max_depth + "' is not an integer");
      }
    }
  } catch (const Error& e) {
    return {std::nullopt, error_json(to_string(e.code()), e.what()), 1};
  }
  return {cfg, "", 0};
}

namespace {

struct Output {
  int exit_code = 0;
  json body;
  std::optional<std::string> text;  // non-JSON formats
};

template <class T>
const T& require(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw Error(ErrorCode::ParseError, std::string(flag) + " is required for '" + command + "'");
  return *v;
}

void require_format(const RunConfig& c, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed) {
    if (c.format == f) return;
  }
  throw Error(ErrorCode::ParseError,
              "format '" + std::string(format_name(c.format)) + "' is not available for '" + c.command + "'");
}

json regime_json(const Regime& r) {
  return {{"regime", std::string(to_string(r.tag))},
          {"at_one_third", r.at_one_third},
          {"at_one_quarter", r.at_one_quarter}};
}

json orbit_json(const OrbitClosure& o) {
  json visited = json::array();
  for (const auto& [pt, word] : o.visited) visited.push_back({{"point", exact(pt)}, {"word", word.str()}});
  json j{{"start", exact(o.start)},
         {"status", std::string(to_string(o.status))},
         {"closure_complete", o.closure_complete},
         {"visited", visited},
         {"visited_count", o.visited.size()}};
  j["witness_to_hole"] = o.witness_to_hole ? json(o.witness_to_hole->str()) : json(nullptr);
  j["hole_point"] = o.hole_point ? exact(*o.hole_point) : json(nullptr);
  return j;
}

json endpoint_check_json(const EndpointCheckReport& r) {
  json endpoints = json::array();
  for (const auto& e : r.endpoints) {
    endpoints.push_back({{"name", e.name},
                         {"point", exact(e.point)},
                         {"status", std::string(to_string(e.orbit.status))},
                         {"closure_complete", e.orbit.closure_complete},
                         {"closure_size", e.orbit.visited.size()},
                         {"witness", e.orbit.witness_to_hole ? json(e.orbit.witness_to_hole->str())
                                                             : json(nullptr)}});
  }
  json closure = json::array();
  for (const auto& p : r.union_closure) closure.push_back(exact(p));
  return {{"overall", std::string(to_string(r.overall))},
          {"endpoints", endpoints},
          {"first_failing", r.first_failing ? json(*r.first_failing) : json(nullptr)},
          {"union_closure", closure},
          {"warnings", r.warnings}};
}

int verdict_exit(Verdict v) { return v == Verdict::Unknown ? 2 : 0; }

Output cmd_classify(const RunConfig& c) {
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto r = regime_classify(lam);
  json j = regime_json(r);
  j["golden_polynomial"] = exact(golden_polynomial(lam));
  return {0, j, {}};
}

Output cmd_visible(const RunConfig& c) {
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto& alpha = require(c.alpha, "--alpha", c.command);
  const auto a = visible_query(lam, alpha, c.depth, c.max_depth);
  json j{{"answer", std::string(to_string(a.answer))}, {"reason", a.reason}, {"alpha", exact(alpha)},
         {"alpha_approx", approx(alpha)}};
  if (a.scale) j["scale"] = *a.scale;
  if (a.gap) {
    j["gap"] = exact(*a.gap);
    j["gap_approx"] = approx(*a.gap);
    j["gap_open"] = true;
  }
  if (a.copy) j["copy"] = exact(*a.copy);
  if (a.witness) j["witness"] = {exact(a.witness->first), exact(a.witness->second)};
  return {a.answer == Visibility::UnknownAtDepth ? 2 : 0, j, {}};
}

Output cmd_visible_set(const RunConfig& c) {
  require_format(c, {OutputFormat::Json, OutputFormat::Svg});
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto v = visible_set(lam, c.k_window, c.depth, c.max_depth);
  json j = regime_json(v.regime);
  j["gaps"] = exact(v.gaps);
  j["gaps_approx"] = json::array();
  for (const auto& g : v.gaps) j["gaps_approx"].push_back(approx(g));
  j["gaps_open"] = true;
  j["exact"] = v.exact;
  j["regime_unsupported"] = v.regime_unsupported;
  j["warnings"] = v.regime_unsupported ? json::array({"RegimeUnsupported: V is empty"}) : json::array();
  j["k_window"] = c.k_window;
  Output out{0, j, {}};
  if (c.format == OutputFormat::Svg) {
    out.text = report::interval_set_svg(v.gaps, "visible slopes, lambda = " + lam.str());
  }
  return out;
}

Output cmd_quotient_cover(const RunConfig& c) {
  require_format(c, {OutputFormat::Json, OutputFormat::Svg});
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto cover = quotient_core_cover(lam, c.depth, c.max_depth);
  json j{{"depth", c.depth},
         {"parts", exact(cover)},
         {"part_count", cover.size()},
         {"total_length", exact(cover.total_length())},
         {"total_length_approx", approx(cover.total_length())}};
  Output out{0, j, {}};
  if (c.format == OutputFormat::Svg) {
    out.text = report::interval_set_svg(cover, "quotient cover, lambda = " + lam.str() +
                                                   ", n = " + std::to_string(c.depth));
  }
  return out;
}

Output cmd_key2(const RunConfig& c) {
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto r = key2_window_check(lam, c.depth, c.max_depth);
  json j{{"depth_checked", r.depth_checked},
         {"pairs_checked", r.pairs_checked},
         {"holds", !r.first_failing_depth.has_value()}};
  j["first_failing_depth"] = r.first_failing_depth ? json(*r.first_failing_depth) : json(nullptr);
  j["failing_pair"] = r.failing_pair
                          ? json::array({exact(r.failing_pair->first), exact(r.failing_pair->second)})
                          : json(nullptr);
  return {0, j, {}};
}

Output cmd_thickness(const RunConfig& c) {
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const Rational gap = Rational(1) - Rational(2) * lam;
  return {0,
          {{"thickness_condition", thickness_condition(lam)},
           {"lambda_squared", exact(lam * lam)},
           {"lambda_gap_squared", exact(lam * gap * gap)}},
          {}};
}

Output cmd_boxdim(const RunConfig& c) {
  require_format(c, {OutputFormat::Json, OutputFormat::Csv});
  const auto& lam = require(c.lambda, "--lambda", c.command);
  std::vector<ScaleCover> covers;
  for (int n = 2; n <= c.depth; ++n) covers.push_back({lam.pow(n), quotient_core_cover(lam, n, c.max_depth)});
  const auto est = box_dim_estimate(covers);
  Output out;
  json rows = json::array();
  std::string csv = "n,scale,count\n";
  for (std::size_t i = 0; i < covers.size(); ++i) {
    rows.push_back({{"n", i + 2}, {"scale", exact(covers[i].scale)}, {"count", est.counts[i]}});
    csv += std::to_string(i + 2) + "," + covers[i].scale.str() + "," + std::to_string(est.counts[i]) + "\n";
  }
  const double reference = std::log(4.0) / -std::log(lam.to_double());
  out.body = {{"slope_approx", approx(est.slope)},
              {"intercept_approx", approx(est.intercept)},
              {"max_residual_approx", approx(est.max_residual)},
              {"reference_log4_over_neg_log_lambda_approx", approx(std::min(reference, 1.0))},
              {"table", rows}};
  if (c.format == OutputFormat::Csv) out.text = csv;
  return out;
}

json ifs_json(const ProjectionIfs& ifs) {
  json maps = json::array();
  for (int j = 1; j <= 4; ++j) {
    maps.push_back({{"label", "g" + std::to_string(j)},
                    {"ratio", exact(ifs.map(j).ratio())},
                    {"shift", exact(ifs.map(j).shift())},
                    {"image", exact(ifs.image(j))}});
  }
  return {{"lambda", exact(ifs.lambda())},
          {"slope_t", exact(ifs.slope_t())},
          {"attractor", exact(ifs.attractor())},
          {"interval_attractor", ifs.interval_attractor()},
          {"degenerate", ifs.degenerate()},
          {"maps", maps}};
}

ProjectionIfs ifs_from(const RunConfig& c) {
  return build_projection_ifs(require(c.lambda, "--lambda", c.command),
                              require(c.slope_t, "--slope-t", c.command));
}

void check_budget(const RunConfig& c) {
  if (c.budget == 0 || c.budget > kMaxBudget) {
    throw Error(ErrorCode::OutOfRange, "budget must be in [1, 10^7]");
  }
}

Output cmd_project(const RunConfig& c) {
  const auto ifs = ifs_from(c);
  json j = ifs_json(ifs);
  const auto regions = overlap_regions(ifs);
  json hs = json::array();
  for (const auto& r : regions.regions) {
    hs.push_back({{"region", exact(r.region)},
                  {"maps", {"g" + std::to_string(r.left_label), "g" + std::to_string(r.right_label)}},
                  {"point", r.is_point()}});
  }
  j["overlaps"] = hs;
  j["warnings"] = regions.warnings;
  return {0, j, {}};
}

Output cmd_orbits(const RunConfig& c) {
  check_budget(c);
  const auto ifs = ifs_from(c);
  const auto& x = require(c.point, "--point", c.command);
  const auto o = orbit_search(ifs, x, c.budget);
  json j = orbit_json(o);
  j["branches"] = admissible_branches(ifs, x);
  j["warnings"] = overlap_regions(ifs).warnings;
  return {o.status == OrbitStatus::BudgetExceeded ? 2 : 0, j, {}};
}

Output cmd_prop(const RunConfig& c, bool first) {
  check_budget(c);
  const auto ifs = ifs_from(c);
  const auto r = first ? prop1_check(ifs, c.budget) : prop2_check(ifs, c.budget);
  json j = endpoint_check_json(r);
  j["budget"] = c.budget;
  return {verdict_exit(r.overall), j, {}};
}

Output cmd_gds(const RunConfig& c) {
  require_format(c, {OutputFormat::Json, OutputFormat::Dot, OutputFormat::Svg});
  check_budget(c);
  const auto ifs = ifs_from(c);
  const auto g = build_gds(ifs, c.budget);
  const auto sound = verify_gds(g, ifs);
  json j = report::gds_to_json(g);
  j["soundness"] = {{"edges_contained", sound.edges_contained},
                    {"avoids_hole", sound.avoids_hole},
                    {"images_disjoint", sound.images_disjoint},
                    {"ok", sound.ok(g.separation)},
                    {"failures", sound.failures}};
  Output out{0, j, {}};
  if (c.format == OutputFormat::Dot) out.text = report::gds_to_dot(g);
  if (c.format == OutputFormat::Svg) {
    out.text = report::interval_set_svg(normalize_union(g.states), "GDS states");
  }
  return out;
}

Output cmd_gds_dim(const RunConfig& c) {
  check_budget(c);
  const auto ifs = ifs_from(c);
  const auto g = build_gds(ifs, c.budget);
  const double rho = spectral_radius(g.adjacency);
  const double dim = gds_dimension(g);
  const auto counts = survivor_word_counts(ifs, c.depth);
  json j{{"spectral_radius_approx", approx(rho)},
         {"dimension_approx", approx(dim)},
         {"separation", std::string(to_string(g.separation))},
         {"state_count", g.states.size()},
         {"survivor_word_counts", counts},
         {"warnings", g.warnings}};
  if (c.depth >= 1 && counts[static_cast<std::size_t>(c.depth) - 1] > 0 && counts.back() > 0) {
    const double ratio = static_cast<double>(counts.back()) /
                         static_cast<double>(counts[static_cast<std::size_t>(c.depth) - 1]);
    j["empirical_dimension_approx"] = approx(std::log(ratio) / -std::log(ifs.lambda().to_double()));
  }
  return {0, j, {}};
}

Output cmd_codings(const RunConfig& c) {
  const auto ifs = ifs_from(c);
  const auto& a = require(c.point, "--point", c.command);
  const auto n = coding_count(ifs, a, c.depth);
  return {0,
          {{"point", exact(a)},
           {"depth", c.depth},
           {"coding_count", n},
           {"univoque_at_depth", n == 1},
           {"branches", admissible_branches(ifs, a)}},
          {}};
}

Output cmd_slice_count(const RunConfig& c) {
  const auto& lam = require(c.lambda, "--lambda", c.command);
  const auto& t = require(c.slope_t, "--slope-t", c.command);
  const auto& a = require(c.point, "--point", c.command);
  const auto n = slice_count_2d(lam, t, a, c.depth);
  return {0, {{"point", exact(a)}, {"depth", c.depth}, {"cell_count", n}, {"single_point_at_depth", n == 1}}, {}};
}

}  // namespace

RunResult run(const RunConfig& config) {
  static const std::map<std::string, std::function<Output(const RunConfig&)>> handlers = {
      {"classify", cmd_classify},
      {"visible", cmd_visible},
      {"visible-set", cmd_visible_set},
      {"quotient-cover", cmd_quotient_cover},
      {"key2-check", cmd_key2},
      {"thickness", cmd_thickness},
      {"boxdim", cmd_boxdim},
      {"project", cmd_project},
      {"orbits", cmd_orbits},
      {"prop1", [](const RunConfig& c) { return cmd_prop(c, true); }},
      {"prop2", [](const RunConfig& c) { return cmd_prop(c, false); }},
      {"gds", cmd_gds},
      {"gds-dim", cmd_gds_dim},
      {"codings", cmd_codings},
      {"slice-count", cmd_slice_count},
  };
  try {
    const auto it = handlers.find(config.command);
    if (it == handlers.end()) throw Error(ErrorCode::ParseError, "unknown command '" + config.command + "'");
    if (config.depth < 0 || config.depth > config.max_depth) {
      throw Error(ErrorCode::DepthBudgetExceeded, "depth " + std::to_string(config.depth) +
                                                      " outside [0, " + std::to_string(config.max_depth) + "]");
    }
    if (config.format == OutputFormat::Csv && config.command != "boxdim") {
      throw Error(ErrorCode::ParseError, "csv output is only available for 'boxdim'");
    }
    if (config.format == OutputFormat::Dot && config.command != "gds") {
      throw Error(ErrorCode::ParseError, "dot output is only available for 'gds'");
    }
    if (config.format == OutputFormat::Svg && config.command != "gds" && config.command != "visible-set" &&
        config.command != "quotient-cover") {
      throw Error(ErrorCode::ParseError, "svg output is not available for '" + config.command + "'");
    }
    Output out = it->second(config);
    if (out.text) return {out.exit_code, *out.text};
    out.body["command"] = config.command;
    if (config.lambda) {
      out.body["lambda"] = exact(*config.lambda);
      out.body["lambda_approx"] = approx(*config.lambda);
    }
    return {out.exit_code, out.body.dump(2) + "\n"};
  } catch (const Error& e) {
    return {1, error_json(to_string(e.code()), e.what())};
  }
}

}  // namespace cantorvis::cli
