#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sinai::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidArguments = 2,
    kResourceGuard = 3,
};

// Documented defaults; `--help` prints the same values.
struct Defaults {
    static constexpr int max_n = 20;
    static constexpr std::int64_t trials = 100000;
    static constexpr int terms = 10000;
    static constexpr int digits = 50;
    static constexpr std::int64_t horizon = 10000;
    static constexpr int chunks = 64;
    static constexpr int threads = 1;
    static constexpr std::uint64_t seed = 20240601;
};

// args excludes the program name. Reports go to `out` (or --output),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinai::cli
