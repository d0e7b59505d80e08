#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cantorvis/cli.hpp"

using namespace cantorvis;
using nlohmann::json;

namespace {

cli::RunResult run_args(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
  const auto parsed = cli::parse_command_line(args, env);
  if (!parsed.config) return {parsed.exit_code, parsed.message};
  return cli::run(*parsed.config);
}

json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  const auto r = run_args(args);
  CAPTURE(r.output);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.output);
}

// Floats only appear under keys ending in "_approx".
void check_no_stray_floats(const json& j, const std::string& key = "") {
  const bool approx = key.size() >= 7 && key.compare(key.size() - 7, 7, "_approx") == 0;
  if (j.is_number_float()) {
    CAPTURE(key);
    CHECK(approx);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) check_no_stray_floats(v, k);
  } else if (j.is_array()) {
    for (const auto& v : j) check_no_stray_floats(v, key);
  }
}

const std::vector<std::vector<std::string>> kSamples = {
    {"classify", "--lambda", "7/20"},
    {"visible", "--lambda", "7/20", "--alpha", "17/10", "--k-window", "3"},
    {"visible-set", "--lambda", "1/3", "--k-window", "1"},
    {"quotient-cover", "--lambda", "1/5", "--depth", "3"},
    {"key2-check", "--lambda", "1/3", "--depth", "3"},
    {"thickness", "--lambda", "3/10"},
    {"boxdim", "--lambda", "1/5", "--depth", "5"},
    {"project", "--lambda", "1/3", "--slope-t", "1/2"},
    {"orbits", "--lambda", "1/3", "--slope-t", "1/2", "--point", "-1/6"},
    {"prop1", "--lambda", "1/3", "--slope-t", "1/2"},
    {"prop2", "--lambda", "1/3", "--slope-t", "1/2"},
    {"gds", "--lambda", "1/3", "--slope-t", "1/2"},
    {"gds-dim", "--lambda", "1/3", "--slope-t", "1/2", "--depth", "10"},
    {"codings", "--lambda", "1/3", "--slope-t", "1/2", "--point", "1/12", "--depth", "8"},
    {"slice-count", "--lambda", "1/3", "--slope-t", "1/2", "--point", "1/12", "--depth", "8"},
};

}  // namespace

TEST_CASE("every subcommand has a sample") {
  CHECK(cli::commands().size() == kSamples.size());
  for (std::size_t i = 0; i < kSamples.size(); ++i) CHECK(cli::commands()[i] == kSamples[i][0]);
}

TEST_CASE("classify and visible") {
  const auto c = run_json({"classify", "--lambda", "7/20"});
  CHECK(c["regime"] == "Regime2_ExactGaps");
  CHECK(c["lambda"] == "7/20");
  const auto v = run_json({"visible", "--lambda", "7/20", "--alpha", "17/10", "--k-window", "3"});
  CHECK(v["answer"] == "Visible");
  CHECK(v["gap"] == json::array({"20/13", "13/7"}));
}

TEST_CASE("errors exit 1 with a stable code") {
  const auto e = run_json({"classify", "--lambda", "3/5"}, 1);
  CHECK(e["error"]["code"] == "OutOfRange");
  CHECK(run_json({"classify", "--lambda", "1/x"}, 1)["error"]["code"] == "ParseError");
  CHECK(run_json({"classify"}, 1)["error"]["code"] == "ParseError");
  CHECK(run_json({"visible", "--lambda", "1/3", "--alpha", "-1"}, 1)["error"]["code"] == "NegativeSlope");
  CHECK(run_json({"project", "--lambda", "1/5", "--slope-t", "3"}, 1)["error"]["code"] == "NotIntervalAttractor");
  CHECK(run_json({"codings", "--lambda", "1/3", "--slope-t", "1/2", "--point", "2"}, 1)["error"]["code"] ==
        "OutOfAttractor");
  CHECK(run_json({"classify", "--lambda", "1/3", "--format", "csv"}, 1)["error"]["code"] == "ParseError");
}

TEST_CASE("unparseable command lines do not produce a config") {
  CHECK(run_args({"frobnicate", "--lambda", "1/3"}).exit_code != 0);
  CHECK(run_args({"classify", "--lambda"}).exit_code != 0);
  CHECK(run_args({"--help"}).exit_code == 0);
}

TEST_CASE("depth ceiling and budget cap") {
  CHECK(run_json({"quotient-cover", "--lambda", "1/5", "--depth", "30"}, 1)["error"]["code"] == "DepthBudgetExceeded");
  CHECK(run_json({"prop2", "--lambda", "1/3", "--slope-t", "1/2", "--budget", "10000001"}, 1)["error"]["code"] ==
        "OutOfRange");
  const auto env = run_args({"quotient-cover", "--lambda", "1/5", "--depth", "6"}, "4");
  CHECK(env.exit_code == 1);
  CHECK(json::parse(env.output)["error"]["code"] == "DepthBudgetExceeded");
  CHECK(run_args({"quotient-cover", "--lambda", "1/5", "--depth", "3"}, "4").exit_code == 0);
}

TEST_CASE("Unknown and budget results exit 2") {
  CHECK(run_json({"prop2", "--lambda", "1/3", "--slope-t", "1/2", "--budget", "2"}, 2)["overall"] == "Unknown");
  const auto v = run_json({"visible", "--lambda", "1/5", "--alpha", "83/100", "--depth", "2"}, 2);
  CHECK(v["answer"] == "UnknownAtDepth");
  CHECK(run_json({"prop1", "--lambda", "1/3", "--slope-t", "1/2"})["overall"] == "False");
}

TEST_CASE("reports are deterministic and re-parse with exact fields") {
  for (const auto& args : kSamples) {
    CAPTURE(args[0]);
    const auto a = run_args(args);
    const auto b = run_args(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = json::parse(a.output);
    CHECK(j["command"] == args[0]);
    check_no_stray_floats(j);
    CHECK(j.dump(2) + "\n" == a.output);
  }
}

TEST_CASE("alternate formats") {
  const auto csv = run_args({"boxdim", "--lambda", "1/5", "--depth", "4", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "n,scale,count\n2,1/25,10\n3,1/125,32\n4,1/625,114\n");
  const auto dot = run_args({"gds", "--lambda", "1/3", "--slope-t", "1/2", "--format", "dot"});
  CHECK(dot.output.rfind("digraph", 0) == 0);
  const auto svg = run_args({"visible-set", "--lambda", "1/3", "--k-window", "1", "--format", "svg"});
  CHECK(svg.output.find("<svg") != std::string::npos);
  CHECK(svg.output.find("</svg>") != std::string::npos);
}
