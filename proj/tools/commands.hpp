#pragma once

#include <iosfwd>

namespace motifclust::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitDataFormat = 3;

// Parses argv (argv[0] is the program name) and runs one subcommand:
// cluster, sweep, eval, stats, or gen {sbm|rmat}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motifclust::cli
