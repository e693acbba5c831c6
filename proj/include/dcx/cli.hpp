#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcx {

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when an input fails validation (or a comparison is negative),
/// 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcx
