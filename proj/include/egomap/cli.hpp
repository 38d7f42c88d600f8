#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace egomap {

// Runs one egomap invocation. args excludes the program name. Returns the
// process exit status: 0 success, 1 input error, 2 internal error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace egomap
