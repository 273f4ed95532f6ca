#ifndef NPBEAM_CLI_HPP
#define NPBEAM_CLI_HPP

#include <string>
#include <vector>

namespace npbeam::cli {

// exit_code: 0 = success, 2 = invalid input / domain error,
// 3 = verification failure beyond tolerance
struct CommandResult {
    int exit_code = 0;
    std::string stdout_payload;
    std::vector<std::string> diagnostics;
};

// Dispatches argv (without the program name) to the subcommands.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace npbeam::cli

#endif
