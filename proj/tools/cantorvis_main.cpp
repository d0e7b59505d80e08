#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cantorvis/cli.hpp"

int main(int argc, char* argv[]) {
  using namespace cantorvis::cli;
  std::optional<std::string> env_depth;
  if (const char* v = std::getenv("CANTOR_VIS_MAX_DEPTH")) env_depth = v;

  const auto parsed = parse_command_line({argv + 1, argv + argc}, env_depth);
  if (!parsed.config) {
    (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  const auto result = run(*parsed.config);
  if (parsed.config->out && result.exit_code != 1) {
    std::ofstream file(*parsed.config->out);
    if (!file) {
      std::cerr << "cannot open " << *parsed.config->out << " for writing\n";
      return 1;
    }
    file << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
