#pragma once

#include <stdexcept>
#include <string>

namespace topoforge {

// Failure categories; the CLI maps them onto exit codes
// (usage/parse = 2, domain = 3, budget = 4).
enum class errc {
  parse_error,
  bad_params,
  not_regular,
  not_simple,
  disconnected,
  ring_missing,
  overlap_edge,
  init_failure,
  degenerate_input,
  mixed_sizes,
  too_large,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline int exit_code(errc c) {
  switch (c) {
    case errc::parse_error:
      return 2;
    case errc::too_large:
      return 4;
    default:
      return 3;
  }
}

}  // namespace topoforge
