#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace segbuf::testing {

struct ProcessOutput {
    int exit_code = -1;
    std::string out;
};

/// Runs a shell command and captures its stdout.
inline ProcessOutput run_command(const std::string& command) {
    ProcessOutput result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace segbuf::testing
