#pragma once

#include <ostream>

namespace confined_atom::cli {

enum ExitCode : int {
  ok = 0,
  no_bound_state = 2,
  numerical_failure = 3,
  usage = 64,
  io_error = 74,
};

// Entry point of the confined-atom tool; subcommands bound, static-sweep,
// resonance, dynamic and oracle.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace confined_atom::cli
