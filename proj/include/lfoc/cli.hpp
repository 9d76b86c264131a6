#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lfoc {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns 0 when the property holds, 1 when it fails
/// (a witness is printed), 2 on usage, parse or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lfoc
