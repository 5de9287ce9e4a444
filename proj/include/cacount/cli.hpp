#pragma once

#include <iosfwd>

namespace cacount::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kResourceLimit = 3,
};

// Entry point of the `cacount` tool: synth, eval, terms, sparse, gf, check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cacount::cli
