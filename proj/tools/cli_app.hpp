#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freightstat::cli {

/// Parse and execute one command line (without the program name).
/// Reports go to `out`, errors to `err`. Returns the process exit code:
/// 0 success, 1 domain/numeric error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freightstat::cli
