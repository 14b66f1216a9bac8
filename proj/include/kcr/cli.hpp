#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace kcr::cli {

/// Process exit codes shared by every command.
enum ExitCode : int { yes = 0, no = 1, error = 2 };

enum class Algorithm { automatic, product, subset };

struct SolveOptions {
    std::filesystem::path input;
    Algorithm algorithm = Algorithm::automatic;
    std::optional<std::size_t> offset;
    std::optional<std::filesystem::path> witness_out;
    bool deterministic = true;
    int jobs = 1;
    std::size_t state_cap = 100'000'000;
};

struct OracleOptions {
    std::filesystem::path input;
    std::size_t combination_cap = 5'000'000;
};

struct GenHardOptions {
    std::filesystem::path psi;
    std::filesystem::path out;
    std::optional<std::filesystem::path> map_out;
    bool strict_regular = false;
};

struct GenRandomOptions {
    std::uint32_t vertices = 1;
    std::uint32_t edges = 0;
    std::uint32_t demands = 0;
    std::uint32_t congestion = 1;
    std::uint64_t seed = 0;
    bool routable = false;
    std::filesystem::path out;
};

// Reports go to `out`, failures to `err`.
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const std::filesystem::path& input, const std::filesystem::path& witness, std::ostream& out,
              std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen_hard(const GenHardOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen_random(const GenRandomOptions& options, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kcr::cli
