#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace blackwell {

// exit codes: 0 success or positive verdict, 1 negative verdict, 2 input or usage error
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct SuiteRow {
  std::string name;
  bool passed;
  std::string detail;
};

// fixed fixtures from the examples, deterministic
std::vector<SuiteRow> fixture_suite();

}  // namespace blackwell
