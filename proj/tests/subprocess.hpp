#pragma once

// Minimal subprocess harness for exercising the CLI surface.

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;
};

inline Result run(const std::string& command) {
    Result r;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace subprocess
