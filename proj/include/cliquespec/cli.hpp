#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquespec {

// Parses and runs one CLI invocation. Exit codes: 0 success, 1 a
// verification check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cliquespec
