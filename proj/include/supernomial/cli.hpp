#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supernomial {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
} // namespace exit_code

// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace supernomial
