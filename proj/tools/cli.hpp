#pragma once

#include <ostream>

namespace lpcount::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;   // engines disagree or a verify suite failed
inline constexpr int kUsage = 2;     // bad arguments or unparsable path
inline constexpr int kCapacity = 3;  // an engine or output cap was exceeded

/// Runs one command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpcount::cli
