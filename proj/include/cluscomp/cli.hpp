#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cluscomp {

/// Run the command line front end on the given arguments (without the program
/// name). Returns the process exit status: 0 on success, 2 on usage errors,
/// 1 on data errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cluscomp
