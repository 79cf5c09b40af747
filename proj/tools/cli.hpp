#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drshadow::cli {

// args excludes the program name. Returns 0 on success or verification pass,
// 1 on verification failure, 2 on usage or library errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drshadow::cli
