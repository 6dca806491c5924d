#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvop {

// Command-line driver; args excludes the program name. Returns the process
// exit code: 0 on success (and all properties passing under `verify`),
// 1 when `verify` finds a failing property, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace curvop
