#pragma once

#include <ostream>

namespace catrec {

// Parses argv and runs one subcommand, writing JSON to `out`.
// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace catrec
