#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace otde::cli {

// Exit codes: 0 success, 2 bad input (including unknown flags and parse
// errors), 3 I/O failure on outputs. Diagnostics go to `err` as one JSON
// object per line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIo = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Flat `key=value` lines; `#` starts a comment. Keys may use '-' or '_'.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> parse_config(const std::string &text);

} // namespace otde::cli
