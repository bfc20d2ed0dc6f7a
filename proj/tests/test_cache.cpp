#include "robdd/cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace robdd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("robdd-cache-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<MemoLevel> run_levels(unsigned k, std::size_t n) {
    std::vector<MemoLevel> levels;
    EngineOptions opts{.threads = 1, .resume_from = std::nullopt,
                       .on_level = [&](const MemoLevel& l) { levels.push_back(l); }};
    distribution(k, n, opts);
    return levels;
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("store then load is lossless") {
    TempDir dir;
    const unsigned k = 9;
    const std::size_t n = max_size(k);
    const auto levels = run_levels(k, n);
    const MemoLevel& fifth = levels[4];
    REQUIRE(fifth.level == 5);
    const fs::path file = cache_store(fifth, k, dir.path);
    CHECK(fs::exists(file));
    const auto loaded = cache_load(dir.path, k, n, 5);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == fifth);

    std::ostringstream a, b;
    write_level(a, fifth, k);
    write_level(b, *loaded, k);
    CHECK(a.str() == b.str());
}

TEST_CASE("header and mismatches") {
    const auto levels = run_levels(3, 5);
    std::ostringstream text;
    write_level(text, levels[0], 3);
    CHECK(text.str().rfind("robdd-census-cache v1 k=3 n=5 level=1\n0: 1 0 0 0 0 0\n", 0) == 0);

    std::istringstream wrong_n(text.str());
    CHECK_THROWS_AS(read_level(wrong_n, 3, 6), cache_error);
    std::istringstream wrong_k(text.str());
    CHECK_THROWS_AS(read_level(wrong_k, 4, 5), cache_error);

    std::string v2 = text.str();
    v2.replace(v2.find("v1"), 2, "v2");
    std::istringstream bad_version(v2);
    CHECK_THROWS_AS(read_level(bad_version, 3, 5), cache_error);
}

TEST_CASE("truncated or corrupted files are rejected") {
    TempDir dir;
    const auto levels = run_levels(4, 9);
    const fs::path file = cache_store(levels[1], 4, dir.path);
    std::string content;
    {
        std::ifstream in(file);
        content.assign(std::istreambuf_iterator<char>(in), {});
    }
    for (std::size_t cut : {content.size() / 2, content.size() - 3, std::size_t{10}}) {
        {
            std::ofstream out(file, std::ios::trunc);
            out << content.substr(0, cut);
        }
        std::string why;
        CHECK_FALSE(cache_load(dir.path, 4, 9, 2, &why).has_value());
        CHECK_FALSE(why.empty());
    }
    {
        std::ofstream out(file, std::ios::trunc);
        std::string garbled = content;
        garbled[garbled.find('\n') + 4] = 'x';
        out << garbled;
    }
    CHECK_FALSE(cache_load(dir.path, 4, 9, 2).has_value());

    std::ostringstream warn;
    CHECK_FALSE(cache_load_latest(dir.path, 4, 9, warn).has_value());
    CHECK(warn.str().find("warning") != std::string::npos);
}

TEST_CASE("load with a different n finds nothing") {
    TempDir dir;
    const auto levels = run_levels(4, 9);
    cache_store(levels[2], 4, dir.path);
    CHECK_FALSE(cache_load(dir.path, 4, 8, 3).has_value());
    CHECK(cache_load(dir.path, 4, 9, 3).has_value());
    // a file renamed to claim another n is caught by its header
    fs::rename(cache_path(dir.path, 4, 9, 3), cache_path(dir.path, 4, 8, 3));
    std::string why;
    CHECK_FALSE(cache_load(dir.path, 4, 8, 3, &why).has_value());
    CHECK(why.find("n=9") != std::string::npos);
}

TEST_CASE("latest usable level wins") {
    TempDir dir;
    const auto levels = run_levels(5, 17);
    for (const auto& l : levels) cache_store(l, 5, dir.path);
    std::ostringstream warn;
    auto latest = cache_load_latest(dir.path, 5, 17, warn);
    REQUIRE(latest.has_value());
    CHECK(latest->level == 5);
    {
        std::ofstream out(cache_path(dir.path, 5, 17, 5), std::ios::trunc);
        out << "robdd-census-cache v1 k=5 n=17 level=5\n";
    }
    latest = cache_load_latest(dir.path, 5, 17, warn);
    REQUIRE(latest.has_value());
    CHECK(latest->level == 4);
}

}  // TEST_SUITE
