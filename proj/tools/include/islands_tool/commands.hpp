#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace islands::tool {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kInvariantFailure = 3,
};

// Runs one command line (args[0] is the program name). Never throws;
// every error becomes one of the exit codes above plus a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace islands::tool
