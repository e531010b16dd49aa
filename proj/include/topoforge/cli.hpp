#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topoforge::cli {

inline constexpr const char* kVersion = "0.1.0";

// Full command-line interface. `args` excludes the program name. Returns the
// process exit code: 0 ok, 2 usage/parse error, 3 domain error, 4 budget
// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topoforge::cli
