#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace howe::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 failed verification, 2 usage or precondition, 3 numerical domain.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace howe::cli
