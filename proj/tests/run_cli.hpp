#pragma once

// Runs the cyclotome executable through the shell and captures its output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_test {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string data(const std::string& name) { return std::string(CYCLOTOME_DATA) + "/" + name; }

inline Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto err_path =
      std::filesystem::temp_directory_path() / ("cyclotome_stderr_" + std::to_string(::getpid()) + "_" +
                                                std::to_string(counter++));
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(CYCLOTOME_CLI) + "' " + args +
                          " 2>'" + err_path.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace cli_test
