#pragma once

// Command-line front end, factored out of main() so tests can drive it.
// Prints ND-JSON to `out` (one document per line, or indented with
// --pretty) and a single {"error": ..., "code": ...} line to `err` on
// failure.  Exit codes: 0 fine, 1 bad input, 2 budget exceeded, 3 the
// verification suite found a failing property.

#include <iosfwd>
#include <string>
#include <vector>

namespace ncploc {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ncploc
