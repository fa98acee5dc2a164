#pragma once

#include <array>
#include <cstdio>
#include <string>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

/// Runs a shell command, capturing combined output and the exit code.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace testsupport
