#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpk::cli {

enum ExitCode : int {
    Ok = 0,
    ParseFailure = 1,  // quiver file, expression or command-line syntax
    SourcesPresent = 2,
    BadModulus = 3,
};

/// Runs one invocation; `args` excludes the program name. Results go to `out` only when
/// the whole command succeeds, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpk::cli
