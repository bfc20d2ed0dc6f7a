#include "robdd/cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include <unistd.h>

namespace robdd {

void write_level(std::ostream& out, const MemoLevel& level, unsigned k) {
    out << "robdd-census-cache v" << kCacheVersion << " k=" << k << " n=" << level.cap << " level=" << level.level
        << "\n";
    for (std::size_t m = 0; m < level.polys.size(); ++m) {
        const UPoly& p = level.polys[m];
        out << m << ":";
        for (std::size_t i = 0; i <= p.cap(); ++i) out << ' ' << p[i].get_str();
        out << '\n';
    }
}

MemoLevel read_level(std::istream& in, unsigned k, std::size_t n) {
    std::string header;
    if (!std::getline(in, header)) throw cache_error("empty cache file");
    static const std::regex header_re(R"(robdd-census-cache v(\d+) k=(\d+) n=(\d+) level=(\d+))");
    std::smatch match;
    if (!std::regex_match(header, match, header_re)) throw cache_error("unrecognised header: " + header);
    if (std::stoi(match[1]) != kCacheVersion) throw cache_error("unsupported cache version v" + match[1].str());
    if (std::stoull(match[2]) != k || std::stoull(match[3]) != n)
        throw cache_error("cache is for k=" + match[2].str() + " n=" + match[3].str() + ", wanted k=" +
                          std::to_string(k) + " n=" + std::to_string(n));
    const std::size_t level_index = std::stoull(match[4]);
    if (level_index > k) throw cache_error("level " + match[4].str() + " exceeds k");

    MemoLevel level;
    level.level = level_index;
    level.cap = n;
    const std::size_t width = level_width(k, n, static_cast<unsigned>(level_index));
    level.polys.reserve(width + 1);
    std::string line;
    for (std::size_t m = 0; m <= width; ++m) {
        if (!std::getline(in, line)) throw cache_error("file ends before entry " + std::to_string(m));
        if (in.eof()) throw cache_error("file truncated inside entry " + std::to_string(m));
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag != std::to_string(m) + ":") throw cache_error("expected entry " + std::to_string(m));
        const std::size_t cap_m = entry_precision(n, m);
        std::vector<BigInt> coeffs;
        coeffs.reserve(cap_m + 1);
        for (std::string token; fields >> token;) {
            BigInt c;
            if (c.set_str(token, 10) != 0) throw cache_error("bad integer in entry " + std::to_string(m));
            coeffs.push_back(std::move(c));
        }
        if (coeffs.size() != cap_m + 1)
            throw cache_error("entry " + std::to_string(m) + " has " + std::to_string(coeffs.size()) +
                              " coefficients, expected " + std::to_string(cap_m + 1));
        level.polys.emplace_back(cap_m, std::move(coeffs));
    }
    if (std::getline(in, line) && !line.empty()) throw cache_error("trailing data after last entry");
    return level;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, unsigned k, std::size_t n, std::size_t level) {
    return dir / ("level-k" + std::to_string(k) + "-n" + std::to_string(n) + "-l" + std::to_string(level) + ".txt");
}

std::filesystem::path cache_store(const MemoLevel& level, unsigned k, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto target = cache_path(dir, k, level.cap, level.level);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw cache_error("cannot write " + tmp.string());
        write_level(out, level, k);
        out.flush();
        if (!out) throw cache_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return target;
}

std::optional<MemoLevel> cache_load(const std::filesystem::path& dir, unsigned k, std::size_t n, std::size_t level,
                                    std::string* why) {
    const auto path = cache_path(dir, k, n, level);
    std::ifstream in(path);
    if (!in) {
        if (why) *why = "no file " + path.string();
        return std::nullopt;
    }
    try {
        MemoLevel loaded = read_level(in, k, n);
        if (loaded.level != level) throw cache_error("file holds level " + std::to_string(loaded.level));
        return loaded;
    } catch (const cache_error& e) {
        if (why) *why = path.string() + ": " + e.what();
        return std::nullopt;
    }
}

std::optional<MemoLevel> cache_load_latest(const std::filesystem::path& dir, unsigned k, std::size_t n,
                                           std::ostream& warn) {
    for (std::size_t level = k; level >= 1; --level) {
        if (!std::filesystem::exists(cache_path(dir, k, n, level))) continue;
        std::string why;
        if (auto loaded = cache_load(dir, k, n, level, &why)) return loaded;
        warn << "warning: ignoring cache file (" << why << ")\n";
    }
    return std::nullopt;
}

}  // namespace robdd
