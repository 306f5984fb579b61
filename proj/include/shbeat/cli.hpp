#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shbeat {

/// Parse and run one command-line invocation.  args excludes the program
/// name.  Normal output goes to out, diagnostics to err.  Returns the
/// process exit code: 0 success, 2 usage error, 3 domain/validation error,
/// 4 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace shbeat
