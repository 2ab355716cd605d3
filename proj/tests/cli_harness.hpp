#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperboot::testing {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, interleaved
};

/// Runs the CLI binary with the given argument string through the shell.
inline CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HYPERBOOT_CLI + "\" " + args + " 2>&1";
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::string fixture(const std::string& name) { return std::string(HYPERBOOT_FIXTURES) + "/" + name; }

/// Malformed-input corpus: (file, 1-based line of the error, 0 for end of input).
inline std::vector<std::pair<std::string, int>> malformed_corpus() {
  std::vector<std::pair<std::string, int>> out;
  std::ifstream in(fixture("malformed/MANIFEST"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string name;
    int at = 0;
    ss >> name >> at;
    out.emplace_back(fixture("malformed/" + name), at);
  }
  return out;
}

/// Fresh scratch directory under the system temp path.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("hyperboot_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hyperboot::testing
