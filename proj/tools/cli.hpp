#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdt::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
};

/// Runs the `sdt` command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdt::cli
