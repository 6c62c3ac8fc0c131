#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "catroute/category_system.hpp"
#include "catroute/graph.hpp"

namespace catroute {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_not_good = 1,
    exit_bad_input = 2,
    exit_cap_exhausted = 3,
};

/// Names accepted by `build --construction`.
const std::vector<std::string>& construction_names();

/// Runs the named construction for `g`. Family parameters missing from
/// `params` are recovered from the graph; the graph must then be exactly the
/// generator output the construction targets. Throws InvalidArgument otherwise.
CategorySystem build_construction(const std::string& name, const Graph& g,
                                  const std::map<std::string, std::uint64_t>& params = {});

/// Entry point of the `catroute` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catroute
