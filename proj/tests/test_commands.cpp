#include "robdd/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace robdd::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig make(Command c, std::optional<long long> k = std::nullopt) {
    RunConfig cfg;
    cfg.command = c;
    cfg.k = k;
    cfg.threads = 1;
    return cfg;
}

int shell_exit(const std::string& args) {
    const std::string cmd = std::string(ROBDD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("dist csv and json encode the same integers") {
    RunConfig cfg = make(Command::dist, 4);
    const Result csv = run_cfg(cfg);
    REQUIRE(csv.code == kOk);
    CHECK(csv.out ==
          "size,count\n0,2\n1,8\n2,48\n3,236\n4,960\n5,3248\n6,8928\n7,17666\n8,23280\n9,11160\n");
    cfg.format = Format::json;
    const Result js = run_cfg(cfg);
    REQUIRE(js.code == kOk);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["k"] == 4);
    CHECK(doc["n"] == 9);
    REQUIRE(doc["coefficients"].size() == 10);
    CHECK(doc["coefficients"][9] == "11160");
    CHECK(doc["coefficients"][0].is_string());
}

TEST_CASE("dist defaults and bounds") {
    CHECK(run_cfg(make(Command::dist, 0)).out == "size,count\n0,2\n");
    RunConfig cfg = make(Command::dist, 3);
    cfg.n = 3;
    CHECK(run_cfg(cfg).out == "size,count\n0,2\n1,6\n2,24\n3,62\n");
    cfg.n = 7;
    CHECK(run_cfg(cfg).out == "size,count\n0,2\n1,6\n2,24\n3,62\n4,88\n5,74\n6,0\n7,0\n");
    cfg.n = -1;
    CHECK(run_cfg(cfg).code == kInputError);
    CHECK(run_cfg(make(Command::dist)).code == kInputError);
    CHECK(run_cfg(make(Command::dist, -2)).code == kInputError);
}

TEST_CASE("output is independent of thread count") {
    RunConfig cfg = make(Command::dist, 7);
    const std::string one = run_cfg(cfg).out;
    cfg.threads = 3;
    CHECK(run_cfg(cfg).out == one);
    cfg.threads = 0;
    CHECK(run_cfg(cfg).out == one);
}

TEST_CASE("resource guard") {
    RunConfig cfg = make(Command::dist, 11);
    cfg.memory_budget_mb = 1;
    const Result r = run_cfg(cfg);
    CHECK(r.code == kResourceGuard);
    CHECK(r.err.find("MiB") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("count") {
    RunConfig cfg = make(Command::count);
    cfg.profile = std::vector<long long>{1, 2, 4, 2};
    CHECK(run_cfg(cfg).out == "profile,count\n\"1,2,4,2\",11160\n");
    cfg.format = Format::json;
    CHECK(run_cfg(cfg).out == "{\"profile\":[1,2,4,2],\"count\":\"11160\"}\n");
    cfg.profile = std::vector<long long>{};
    cfg.format = Format::csv;
    CHECK(run_cfg(cfg).out == "profile,count\n\"\",2\n");
    cfg.profile = std::vector<long long>{1, -1};
    CHECK(run_cfg(cfg).code == kInputError);
    cfg.profile = std::vector<long long>{1, 2};
    cfg.k = 3;
    CHECK(run_cfg(cfg).code == kInputError);
    CHECK(run_cfg(make(Command::count)).code == kInputError);
}

TEST_CASE("maxsize") {
    CHECK(run_cfg(make(Command::maxsize, 9)).out == "k,max_size\n9,141\n");
    RunConfig cfg = make(Command::maxsize, 12);
    cfg.format = Format::json;
    CHECK(run_cfg(cfg).out == "{\"k\":12,\"max_size\":765}\n");
    CHECK(run_cfg(make(Command::maxsize, 0)).code == kInputError);
}

TEST_CASE("plot-data") {
    const Result k2 = run_cfg(make(Command::plot_data, 2));
    REQUIRE(k2.code == kOk);
    CHECK(k2.out.find("3,2,1,1.25000000000000e-01\n") != std::string::npos);

    RunConfig cfg = make(Command::plot_data, 4);
    cfg.format = Format::json;
    const auto doc = nlohmann::json::parse(run_cfg(cfg).out);
    const auto& last = doc["points"].back();
    CHECK(last["size"] == 9);
    CHECK(last["count"] == "11160");
    CHECK(last["log2_count_approx"].get<double>() == doctest::Approx(13.446).epsilon(1e-4));
    CHECK(last["probability_approx"] == "1.70288085937500e-01");

    cfg = make(Command::plot_data, 3);
    cfg.n = 8;
    const std::string csv = run_cfg(cfg).out;
    CHECK(csv.find("\n6,") == std::string::npos);
    CHECK(csv.find("\n5,74,") != std::string::npos);
}

TEST_CASE("plot-data probabilities far below double range") {
    RunConfig cfg = make(Command::plot_data, 11);
    cfg.n = 2;
    const Result r = run_cfg(cfg);
    REQUIRE(r.code == kOk);
    // 2 / 2^2048
    CHECK(r.out.find("0,2,1,6.18869209476516e-617\n") != std::string::npos);
}

TEST_CASE("validate") {
    for (long long k = 0; k <= 4; ++k) {
        const Result r = run_cfg(make(Command::validate, k));
        CHECK(r.code == kOk);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    const Result refused = run_cfg(make(Command::validate, 5));
    CHECK(refused.code == kInputError);
    CHECK(refused.err.find("k <= 4") != std::string::npos);

    RunConfig faulty = make(Command::validate, 4);
    faulty.inject_fault = 12345;
    const Result bad = run_cfg(faulty);
    CHECK(bad.code == kValidationMismatch);
    CHECK(bad.out.find("MISMATCH size") != std::string::npos);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cache directory round trip through dist") {
    const auto dir = std::filesystem::temp_directory_path() / ("robdd-cli-cache-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    RunConfig cfg = make(Command::dist, 6);
    cfg.cache_dir = dir;
    const Result first = run_cfg(cfg);
    REQUIRE(first.code == kOk);
    CHECK(std::filesystem::exists(dir / "level-k6-n29-l6.txt"));
    const Result second = run_cfg(cfg);
    CHECK(second.out == first.out);
    CHECK(second.err.find("resuming from cached level 6") != std::string::npos);

    // a stale version is ignored with a warning and recomputed
    std::filesystem::remove(dir / "level-k6-n29-l6.txt");
    {
        std::ofstream out(dir / "level-k6-n29-l5.txt", std::ios::trunc);
        out << "robdd-census-cache v0 k=6 n=29 level=5\n";
    }
    const Result third = run_cfg(cfg);
    CHECK(third.out == first.out);
    CHECK(third.err.find("warning") != std::string::npos);
    CHECK(third.err.find("resuming from cached level 4") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes from the binary") {
    CHECK(shell_exit("dist -k 2") == kOk);
    CHECK(shell_exit("validate -k 5") == kInputError);
    CHECK(shell_exit("dist -k 11 --mem-budget-mb 1") == kResourceGuard);
    CHECK(shell_exit("validate -k 3 --inject-fault 7") == kValidationMismatch);
    CHECK(shell_exit("dist --bogus") == kInputError);
    CHECK(shell_exit("count -k 2") == kInputError);
    CHECK(shell_exit("dist -k 2 --format yaml") == kInputError);
}

}  // TEST_SUITE
