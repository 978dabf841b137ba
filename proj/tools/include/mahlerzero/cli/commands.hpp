#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mahlerzero::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kExpansionError = 3,
  kBoundViolated = 4,
  kCorpusFailures = 5,
};

/// Entry point of the `mahlerzero` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahlerzero::cli
