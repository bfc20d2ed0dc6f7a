// robdd-census: exact ROBDD size distributions from the command line.

#include "robdd/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using robdd::cli::Command;
using robdd::cli::Format;
using robdd::cli::RunConfig;

void add_common(CLI::App& sub, RunConfig& cfg, bool with_n) {
    sub.add_option("-k,--k", cfg.k, "number of variables");
    if (with_n) sub.add_option("-n,--n", cfg.n, "size bound (default: maximal ROBDD size for k)");
    sub.add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}},
                                            CLI::ignore_case));
    sub.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distribution of Boolean functions by ROBDD size"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<long long> profile;
    std::string cache_dir;

    auto* dist = app.add_subcommand("dist", "coefficients of the size generating function");
    add_common(*dist, cfg, true);
    dist->add_option("--cache-dir", cache_dir, "persist and resume per-level results here");
    dist->add_option("--mem-budget-mb", cfg.memory_budget_mb, "refuse runs estimated above this many MiB");

    auto* plot = app.add_subcommand("plot-data", "log2 counts and probabilities per size");
    add_common(*plot, cfg, true);
    plot->add_option("--cache-dir", cache_dir, "persist and resume per-level results here");
    plot->add_option("--mem-budget-mb", cfg.memory_budget_mb, "refuse runs estimated above this many MiB");

    auto* count = app.add_subcommand("count", "number of ROBDDs with a given profile");
    add_common(*count, cfg, false);
    count->add_option("--profile", profile, "layer widths, comma separated")->delimiter(',')->required();

    auto* maxsize = app.add_subcommand("maxsize", "largest ROBDD size for k variables");
    add_common(*maxsize, cfg, false);

    auto* validate = app.add_subcommand("validate", "compare against brute-force enumeration (k <= 4)");
    add_common(*validate, cfg, false);
    std::uint64_t fault = 0;
    auto* fault_opt = validate->add_option("--inject-fault", fault, "flip one truth-table bit (harness check)");
    fault_opt->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : robdd::cli::kInputError;
    }

    if (*dist) cfg.command = Command::dist;
    else if (*plot) cfg.command = Command::plot_data;
    else if (*count) cfg.command = Command::count;
    else if (*maxsize) cfg.command = Command::maxsize;
    else cfg.command = Command::validate;

    if (*count) cfg.profile = profile;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (fault_opt->count() > 0) cfg.inject_fault = fault;

    return robdd::cli::run(cfg, std::cout, std::cerr);
}
