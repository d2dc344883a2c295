#ifndef HK_CLI_HPP
#define HK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hk::cli {

// Runs the command-line tool on the given arguments (without the program
// name) and returns the process exit code: 0 on success, 1 on bad input,
// 2 when a verification subcommand found violations.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hk::cli

#endif  // HK_CLI_HPP
