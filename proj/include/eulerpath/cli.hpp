#ifndef EULERPATH_CLI_HPP
#define EULERPATH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerpath {

// Entry point behind main(): parses `args` (program name excluded), runs the
// selected subcommand, and writes a run manifest as JSON to `out`.  The
// manifest records schema version, command, seed, input digests, and the
// command's outputs; identical inputs and seed give byte-identical output.
// Returns 0 on success, 1 on invalid input, 2 on verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerpath

#endif  // EULERPATH_CLI_HPP
