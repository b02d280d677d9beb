#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotoid::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command line (without the program name). JSON goes to out, errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotoid::cli
