#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zclass {

// Full command-line driver. args excludes the program name. Returns the
// process exit code: 0 success, 1 domain rejection, 2 parse/usage/IO error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zclass
