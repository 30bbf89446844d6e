#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adelic::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// as JSON lines, diagnostics to `err`. Returns 0 when every check passes,
/// 1 when a check fails or is flagged, 2 on usage or domain errors.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adelic::cli
