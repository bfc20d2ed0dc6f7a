#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace robdd::cli {

enum class Command { dist, count, maxsize, validate, plot_data };
enum class Format { csv, json };

enum ExitCode : int { kOk = 0, kInputError = 1, kResourceGuard = 2, kValidationMismatch = 3 };

struct RunConfig {
    Command command = Command::dist;
    std::optional<long long> k;
    std::optional<long long> n;  // defaults to max_size(k)
    std::optional<std::vector<long long>> profile;
    Format format = Format::csv;
    std::optional<std::filesystem::path> cache_dir;
    unsigned threads = 0;  // 0: all hardware threads
    std::uint64_t memory_budget_mb = 16384;
    std::optional<std::uint64_t> inject_fault;  // validate only
};

/// Runs one command. Data goes to out, diagnostics to err; the return value
/// is the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_maxsize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plot_data(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace robdd::cli
