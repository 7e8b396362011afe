#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saga::cli {

// Runs one `saga` command line (args[0] is the program name). Results go to
// --output or `out`; failures are reported on `err` as one JSON object and
// mapped to a per-error exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saga::cli
