#pragma once

// Persistent MemoLevel files.
//
//   robdd-census-cache v1 k=<k> n=<n> level=<l>
//   0: c_0 c_1 ... c_n
//   1: c_0 c_1 ... c_n
//   2: c_0 ... c_{n-1}
//   ...
//
// One line per entry m = 0..level_width(k, n, l); entry m lists exactly
// entry_precision(n, m) + 1 decimal coefficients, zeros included, so a
// truncated file is always detectable.

#include "robdd/sizegf.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace robdd {

inline constexpr int kCacheVersion = 1;

class cache_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_level(std::ostream& out, const MemoLevel& level, unsigned k);
/// Throws cache_error on any format, version or (k, n) mismatch.
MemoLevel read_level(std::istream& in, unsigned k, std::size_t n);

std::filesystem::path cache_path(const std::filesystem::path& dir, unsigned k, std::size_t n, std::size_t level);

/// Writes to a temporary file in dir and renames it into place.
std::filesystem::path cache_store(const MemoLevel& level, unsigned k, const std::filesystem::path& dir);

/// The cached level, or nullopt with the reason in *why.
std::optional<MemoLevel> cache_load(const std::filesystem::path& dir, unsigned k, std::size_t n, std::size_t level,
                                    std::string* why = nullptr);

/// Highest usable level in dir for (k, n), scanning from k downwards.
/// Rejected files are reported on warn and skipped.
std::optional<MemoLevel> cache_load_latest(const std::filesystem::path& dir, unsigned k, std::size_t n,
                                           std::ostream& warn);

}  // namespace robdd
