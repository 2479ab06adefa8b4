#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spacegraph::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;    // bad command line or malformed graph file
inline constexpr int kPrecondition = 2;  // input valid but not admissible for the command
inline constexpr int kMismatch = 3;      // --verify disagreed with the oracle
inline constexpr int kInternal = 4;      // a library invariant check fired

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reports oracle disagreements on err; kMismatch if there are any.
int verify_verdict(const std::vector<std::string>& mismatches, std::ostream& err);

}  // namespace spacegraph::cli
