#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhkit::cli {

/// Runs one command line (without the program name). Machine-readable
/// results go to `out`, diagnostics to `err`. Returns 0 on success, 1 on
/// usage errors and 2 on physics or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhkit::cli
