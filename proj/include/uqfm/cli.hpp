#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqfm {

/// Batch command-line driver. args excludes the program name. Returns the
/// process exit code: 0 success, 1 verification failure, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace uqfm
