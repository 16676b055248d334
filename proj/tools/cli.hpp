#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fullerene::cli {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fullerene::cli
