#pragma once

// Shared helpers for tests that drive the CLI binary or touch the filesystem.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

inline CommandResult run_command(const std::string& command) {
    const std::string full = command + " 2>&1";
    FILE* pipe = ::popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = ::pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

inline std::string make_temp_dir() {
    std::string path = "/tmp/kljn_test_XXXXXX";
    if (::mkdtemp(path.data()) == nullptr)
        throw std::runtime_error("mkdtemp failed");
    return path;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline long count_lines(const std::string& text) {
    long n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace testsupport
