#pragma once

// Helpers for tests that drive the command-line tool as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cliu {

struct RunResult {
    int exitCode = -1;
    std::string output;  // stdout, plus stderr when mergeStderr was set
};

inline std::string shellQuote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

/// Runs the built CLI with the given arguments and captures its output.
inline RunResult runCli(const std::vector<std::string>& args, bool mergeStderr = false) {
    std::string cmd = shellQuote(NDET_CLI_PATH);
    for (const auto& a : args) cmd += " " + shellQuote(a);
    if (mergeStderr)
        cmd += " 2>&1";
    else
        cmd += " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status))
        res.exitCode = WEXITSTATUS(status);
    else
        res.exitCode = -1;
    return res;
}

/// A file under the system temp dir that is deleted when the guard dies.
class TempFile {
  public:
    explicit TempFile(const std::string& contents = "") {
        static int counter = 0;
        auto dir = std::filesystem::temp_directory_path();
        path_ = (dir / ("ndet_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++)))
                    .string();
        if (!contents.empty()) write(contents);
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

    void write(const std::string& contents) const {
        std::ofstream out(path_, std::ios::binary);
        out << contents;
    }

    std::string read() const {
        std::ifstream in(path_, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

  private:
    std::string path_;
};

}  // namespace cliu
