#pragma once

// Experiment runner behind the gaussmf command-line tool. Each subcommand
// writes <out>.csv (a series with a header row) and <out>.json
// ({tool_version, config, wall_time, summary}).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitResource = 3;

[[nodiscard]] const char* tool_version() noexcept;

[[nodiscard]] const std::vector<std::string>& subcommands();

struct ExperimentConfig {
    std::string subcommand;
    std::string spec = "one";
    std::string region = "square";
    double scale = 1.0;                // k_N = scale * N
    std::vector<int> n_list;           // empty: per-subcommand default
    std::vector<std::uint64_t> bounds; // empty: per-subcommand default
    std::uint64_t seed = 1;
    int q = 2;
    double alpha = 0.0;                // 0: per-system default
    std::vector<double> poly;          // Weyl polynomial coefficients, constant first
    int workers = 0;                   // 0: OpenMP default
    std::string out;                   // output stem; empty: the subcommand name
    std::string system = "cyclic";     // cyclic, torus, affine, two_point
    std::string observable;            // empty: per-system default
    std::vector<std::int64_t> tau;     // ramified, split, inert powers
    int dimension = 2;                 // affine_unipotent dimension
    int side = 2;                      // counterexample square side
    int count = 0;                     // 0: per-subcommand default
    int sectors = 8;                   // hecke bins
    int part = 1;                      // gcdmoment: 1 single set, 2 product set
    std::vector<std::string> inputs;   // factor operands such as 3+4i
};

[[nodiscard]] nlohmann::json to_json(const ExperimentConfig& c);

struct RunResult {
    int exit_code = kExitOk;
    std::filesystem::path csv;
    std::filesystem::path json;
    std::string message;
};

// Runs one subcommand. DomainError maps to exit code 2, ResourceError to 3;
// the message is also written to `err`.
RunResult run(const ExperimentConfig& config, std::ostream& err);

// 17 significant digits, so doubles round-trip.
[[nodiscard]] std::string format_real(double v);

} // namespace gmf::cli
