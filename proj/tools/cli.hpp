#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 domain error
// (JSON error object on stdout), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degseq::cli
