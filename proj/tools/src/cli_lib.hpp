#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

// Dispatches one CLI invocation. `args` excludes the program name. Reports go
// to `out` (or the --out file), errors to `err` as {"error","detail"} JSON.
// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
