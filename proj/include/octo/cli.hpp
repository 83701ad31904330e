#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octo {

/// Runs the octo-so8 command line. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 1 for `verify --strict` with
/// a refuted claim, 2 for usage, fixture and other operational errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octo
