#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dehnkit::cli {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success or a Trivial verdict, 1 on a Nontrivial verdict or a violated
// check, 2 on usage and validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehnkit::cli
