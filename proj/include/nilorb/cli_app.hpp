#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilorb {

/// Exit codes: 0 success, 2 parse error, 3 domain error, 4 consistency failure.
enum ExitCode { kOk = 0, kParseError = 2, kDomainError = 3, kConsistencyFailure = 4 };

/// Full CLI entry point; out/err default to the process streams in main().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb
