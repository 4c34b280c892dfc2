#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fdebt {

struct ProcessResult {
  int exit_code = 0;  // 128 + signal when killed
  std::string out;
  std::string err;
};

/// Absolute path of `program`: checked directly when it contains a slash,
/// otherwise searched on PATH. Absent when not found or not executable.
std::optional<std::string> find_executable(const std::string& program);

/// Runs `argv` (argv[0] an executable path), feeding `input` to its stdin
/// and collecting stdout and stderr. Throws std::system_error when the
/// process cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv, const std::string& input = {});

}  // namespace fdebt
