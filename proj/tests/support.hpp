#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "sadf/adf.hpp"
#include "sadf/af.hpp"
#include "sadf/interpretation.hpp"

namespace testutil {

inline std::string instance_path(const std::string& name) {
  return std::string(SADF_INSTANCE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline sadf::Adf load_adf(const std::string& name) {
  return sadf::Adf::load(read_file(instance_path(name)));
}

inline sadf::Af load_af(const std::string& name) {
  return sadf::Af::load(read_file(instance_path(name)));
}

inline sadf::Interpretation interp(const sadf::Adf& adf,
                                   const std::string& literal) {
  return sadf::parse_interpretation(literal, adf.universe());
}

/// All 3^n interpretations over the universe, in counter order.
inline std::vector<sadf::Interpretation> all_interpretations(
    const sadf::UniversePtr& universe) {
  static constexpr sadf::Truth kDigits[3] = {sadf::Truth::T, sadf::Truth::F,
                                             sadf::Truth::U};
  std::size_t total = 1;
  for (std::size_t i = 0; i < universe->size(); ++i) total *= 3;
  std::vector<sadf::Interpretation> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<sadf::Truth> values(universe->size(), sadf::Truth::U);
    std::size_t rest = code;
    for (std::size_t i = 0; i < universe->size(); ++i) {
      values[i] = kDigits[rest % 3];
      rest /= 3;
    }
    out.emplace_back(universe, std::move(values));
  }
  return out;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the solver binary with a shell argument string, capturing stdout.
/// Redirect stderr within `args` when a test needs to inspect it.
inline CliResult run_cli(const std::string& args) {
  std::string command = std::string(SADF_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::string output;
  std::array<char, 4096> chunk{};
  std::size_t n = 0;
  while ((n = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    output.append(chunk.data(), n);
  int status = pclose(pipe);
  CliResult result;
  result.output = std::move(output);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testutil
