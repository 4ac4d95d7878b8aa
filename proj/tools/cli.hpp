#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympieri {

// Full command-line front end; args excludes the program name.  Returns the
// process exit code: 0 success, 1 verification failure or precondition
// rejection, 2 usage error.  Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympieri
