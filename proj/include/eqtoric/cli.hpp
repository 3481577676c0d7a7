#ifndef EQTORIC_CLI_HPP
#define EQTORIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eqtoric {

/// Runs the command line `args` (program name excluded) and returns the
/// exit code.  Reports go to `out`, usage and I/O diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqtoric

#endif
