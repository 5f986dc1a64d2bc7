#ifndef RRT_CLI_HPP
#define RRT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rrt {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,         // bad flags, bad config, unreadable input, unwritable output
    kExitNumericGuard = 3,  // a score would overflow 64 bits
    kExitInternal = 4,      // failed self-check
};

/// Entry point of the `rrt` tool.  args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrt

#endif  // RRT_CLI_HPP
