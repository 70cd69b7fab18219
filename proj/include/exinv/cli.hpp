#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace exinv::cli {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success / all suites pass, 1 suite failure, 2 usage or
/// parse error. All report output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace exinv::cli
