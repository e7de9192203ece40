#ifndef SRR_TOOLS_CLI_HPP
#define SRR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srr::cli {

enum ExitCode
{
    kSuccess = 0,
    kFailure = 1,      ///< a --verify cross-check disagreed
    kValidation = 2,
    kGuard = 3,
    kParse = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace srr::cli

#endif
