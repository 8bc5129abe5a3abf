#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsgreedy::cli {

/// Process exit codes; a total function of the outcome class.
enum ExitCode : int {
  kOk = 0,             // success, or GREEDY for `check`
  kNegative = 1,       // NOT GREEDY for `check`, non-member for `repr`
  kUsage = 2,          // parse failure or invalid input
  kVerifyFailed = 3,   // --verify cross-check disagreement, internal error
};

/// Runs one `nsgreedy` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nsgreedy::cli
