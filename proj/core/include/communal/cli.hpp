#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace communal::cli {

/// Runs one CLI invocation. args excludes the program name. Data goes to
/// out, diagnostics to err. Returns the process exit code:
///   0 success, 2 invalid share system, 3 cap exceeded, 4 invalid tuple,
///   1 usage or internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace communal::cli
