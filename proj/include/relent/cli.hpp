#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relent {

// Full command-line entry point, factored out of main() so tests can drive
// it in-process.  Returns the process exit code: 0 success, 1 verification
// found violations, 2 usage/parse/precondition errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relent
