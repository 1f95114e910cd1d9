#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmreg {

// Entire command-line tool behind a testable seam. `args` is argv without
// the program name. Returns the process exit code: 0 when every check
// passes, 1 when an assertion fails, 2 for usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmreg
