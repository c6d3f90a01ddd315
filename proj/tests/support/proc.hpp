#pragma once

// Minimal subprocess runner for driving the command-line binary in tests.

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace rf::test {

struct RunResult {
    int exit_code = -1;
    std::string out; // captured standard output
};

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (const char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += '\'';
    return quoted;
}

// Runs argv through /bin/sh, capturing standard output. Standard error is
// discarded unless merge_stderr folds it into the captured stream.
inline RunResult run_command(const std::vector<std::string>& argv, bool merge_stderr = false) {
    std::string command;
    for (const auto& arg : argv) {
        command += shell_quote(arg);
        command += ' ';
    }
    command += merge_stderr ? "2>&1" : "2>/dev/null";

    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

} // namespace rf::test
