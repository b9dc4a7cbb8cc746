#pragma once

#include <ostream>

namespace steinberg::cli {

// Parses argv, executes the selected subcommand, and writes results to out
// and diagnostics to err.  Returns 0 on success, 1 on usage or domain
// errors, 2 when a verification sweep finds a disagreement.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
