#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

// One invocation of the command-line tool, dispatching on args[0] as the
// subcommand.  Streams are injected so tests can drive the tool in-process.
// Returns the exit status: 0 on success, 1 when an input is mathematically
// invalid or a resource bound trips, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qf::cli
