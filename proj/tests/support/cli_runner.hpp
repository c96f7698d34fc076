#pragma once

// Runs the gsflow binary as a subprocess and captures exit code and output.
// The binary and fixture locations come from GSFLOW_CLI / GSFLOW_FIXTURES
// (set by ctest), with in-tree fallbacks for manual runs.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace cli {

inline std::string binary_path() {
  if (const char* env = std::getenv("GSFLOW_CLI")) return env;
  return "./bin/gsflow";
}

inline std::string fixtures_dir() {
  if (const char* env = std::getenv("GSFLOW_FIXTURES")) return env;
  return "../fixtures";
}

inline std::string fixture(const std::string& name) { return fixtures_dir() + "/" + name; }

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline RunResult run(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot spawn: " + cmd);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace cli
