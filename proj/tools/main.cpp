#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const npbeam::cli::CommandResult result = npbeam::cli::run(args);
    if (!result.stdout_payload.empty()) std::fputs(result.stdout_payload.c_str(), stdout);
    for (const auto& d : result.diagnostics) std::fprintf(stderr, "%s\n", d.c_str());
    return result.exit_code;
}
