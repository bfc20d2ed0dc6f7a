#include "robdd/commands.hpp"

#include "robdd/cache.hpp"
#include "robdd/errors.hpp"
#include "robdd/oracle.hpp"
#include "robdd/profilecount.hpp"
#include "robdd/sizegf.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <ostream>
#include <set>

namespace robdd::cli {

namespace {

using json = nlohmann::ordered_json;

unsigned require_k(const RunConfig& cfg, long long min_k, long long max_k) {
    if (!cfg.k) throw input_error("missing -k");
    if (*cfg.k < min_k || *cfg.k > max_k)
        throw input_error("-k must be in [" + std::to_string(min_k) + ", " + std::to_string(max_k) + "], got " +
                          std::to_string(*cfg.k));
    return static_cast<unsigned>(*cfg.k);
}

std::size_t resolve_n(const RunConfig& cfg, unsigned k) {
    if (cfg.n) {
        if (*cfg.n < 0) throw input_error("-n must be non-negative");
        return static_cast<std::size_t>(*cfg.n);
    }
    return k == 0 ? 0 : static_cast<std::size_t>(max_size(k));
}

void guard_memory(const RunConfig& cfg, unsigned k, std::size_t n) {
    const std::uint64_t estimate = estimate_live_bytes(k, n, cfg.threads);
    const std::uint64_t budget = cfg.memory_budget_mb * 1024 * 1024;
    if (estimate > budget)
        throw resource_error("k=" + std::to_string(k) + " n=" + std::to_string(n) + " needs about " +
                             std::to_string(estimate / (1024 * 1024)) + " MiB live, budget is " +
                             std::to_string(cfg.memory_budget_mb) + " MiB (raise --mem-budget-mb or lower -n)");
}

UPoly compute(const RunConfig& cfg, unsigned k, std::size_t n, std::ostream& err) {
    guard_memory(cfg, k, n);
    EngineOptions options;
    options.threads = cfg.threads;
    if (cfg.cache_dir) {
        options.resume_from = cache_load_latest(*cfg.cache_dir, k, n, err);
        if (options.resume_from) err << "resuming from cached level " << options.resume_from->level << "\n";
        const auto dir = *cfg.cache_dir;
        options.on_level = [dir, k, &err](const MemoLevel& level) {
            try {
                cache_store(level, k, dir);
            } catch (const std::exception& e) {
                err << "warning: could not store level " << level.level << ": " << e.what() << "\n";
            }
        };
    }
    return distribution(k, n, options);
}

std::string format_mpfr(const char* fmt, mpfr_srcptr x) {
    char* raw = nullptr;
    mpfr_asprintf(&raw, fmt, x);
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
}

struct ApproxFields {
    std::string log2_count;
    std::string probability;
};

// log2(count) and count / 2^(2^k), 15 significant digits
ApproxFields approximate(const BigInt& count, unsigned k) {
    mpfr_t value, log2v;
    mpfr_inits2(128, value, log2v, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(value, count.get_mpz_t(), MPFR_RNDN);
    mpfr_log2(log2v, value, MPFR_RNDN);
    mpfr_div_2ui(value, value, 1ul << k, MPFR_RNDN);
    ApproxFields out{format_mpfr("%.15Rg", log2v), format_mpfr("%.14Re", value)};
    mpfr_clears(value, log2v, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace

int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const unsigned k = require_k(cfg, 0, 62);
    const std::size_t n = resolve_n(cfg, k);
    const UPoly f = compute(cfg, k, n, err);
    if (cfg.format == Format::json) {
        json doc;
        doc["k"] = k;
        doc["n"] = n;
        json coeffs = json::array();
        for (std::size_t i = 0; i <= n; ++i) coeffs.push_back(f[i].get_str());
        doc["coefficients"] = std::move(coeffs);
        out << doc.dump() << "\n";
    } else {
        out << "size,count\n";
        for (std::size_t i = 0; i <= n; ++i) out << i << ',' << f[i].get_str() << '\n';
    }
    return kOk;
}

int cmd_plot_data(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const unsigned k = require_k(cfg, 0, 62);
    const std::size_t n = resolve_n(cfg, k);
    const UPoly f = compute(cfg, k, n, err);
    json points = json::array();
    if (cfg.format == Format::csv) out << "size,count,log2_count_approx,probability_approx\n";
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(f[i]) == 0) continue;
        const ApproxFields approx = approximate(f[i], k);
        if (cfg.format == Format::json) {
            json p;
            p["size"] = i;
            p["count"] = f[i].get_str();
            p["log2_count_approx"] = std::stod(approx.log2_count);
            p["probability_approx"] = approx.probability;
            points.push_back(std::move(p));
        } else {
            out << i << ',' << f[i].get_str() << ',' << approx.log2_count << ',' << approx.probability << '\n';
        }
    }
    if (cfg.format == Format::json) {
        json doc;
        doc["k"] = k;
        doc["n"] = n;
        doc["points"] = std::move(points);
        out << doc.dump() << "\n";
    }
    return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.profile) throw input_error("count needs --profile");
    const Profile profile = Profile::from_signed(*cfg.profile);
    if (cfg.k && *cfg.k != static_cast<long long>(profile.length()))
        throw input_error("-k " + std::to_string(*cfg.k) + " does not match profile length " +
                          std::to_string(profile.length()));
    const std::size_t bound = table_bound_for(profile, 1);
    const PhiTable table(bound, CombinTables(bound + 1));
    const BigInt count = count_robdds_with_profile(profile, table);
    if (cfg.format == Format::json) {
        json doc;
        doc["profile"] = std::vector<std::size_t>(profile.widths().begin(), profile.widths().end());
        doc["count"] = count.get_str();
        out << doc.dump() << "\n";
    } else {
        std::string joined;
        for (std::size_t i = 0; i < profile.length(); ++i)
            joined += (i ? "," : "") + std::to_string(profile.widths()[i]);
        out << "profile,count\n\"" << joined << "\"," << count.get_str() << '\n';
    }
    return kOk;
}

int cmd_maxsize(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const unsigned k = require_k(cfg, 1, 62);
    const std::uint64_t value = max_size(k);
    if (cfg.format == Format::json) {
        json doc;
        doc["k"] = k;
        doc["max_size"] = value;
        out << doc.dump() << "\n";
    } else {
        out << "k,max_size\n" << k << ',' << value << '\n';
    }
    return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k && *cfg.k > static_cast<long long>(oracle::kMaxCensusK))
        throw input_error("validate enumerates all 2^(2^k) functions and is limited to k <= " +
                          std::to_string(oracle::kMaxCensusK) + "; use dist for larger k");
    const unsigned k = require_k(cfg, 0, oracle::kMaxCensusK);
    const std::size_t n = k == 0 ? 0 : static_cast<std::size_t>(max_size(k));

    oracle::CensusOptions census_options;
    census_options.threads = cfg.threads;
    census_options.fault_code = cfg.inject_fault;
    const oracle::Census census = oracle::census(k, census_options);

    const UPoly f = distribution(k, n + 1, EngineOptions{.threads = cfg.threads});
    bool ok = true;
    auto mismatch = [&](const std::string& key, const std::string& oracle_value, const std::string& engine_value) {
        if (ok) out << "MISMATCH " << key << ": oracle=" << oracle_value << " engine=" << engine_value << "\n";
        ok = false;
    };

    for (std::size_t i = 0; i <= n + 1 && ok; ++i) {
        const auto it = census.by_size.find(i);
        const BigInt expected = it == census.by_size.end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
        if (f[i] != expected) mismatch("size " + std::to_string(i), expected.get_str(), f[i].get_str());
    }

    // every profile with total <= n, occurring or not
    const PhiTable table(n + 1, CombinTables(n + 2));
    std::size_t profiles_checked = 0;
    std::vector<std::size_t> widths(k, 0);
    auto visit = [&](auto&& self, std::size_t layer, std::size_t used) -> void {
        if (!ok) return;
        if (layer == k) {
            const Profile p(widths);
            const auto it = census.by_profile.find(p);
            const BigInt expected =
                it == census.by_profile.end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
            const BigInt got = count_robdds_with_profile(p, table);
            ++profiles_checked;
            if (got != expected) mismatch("profile " + p.to_string(), expected.get_str(), got.get_str());
            return;
        }
        for (std::size_t w = 0; used + w <= n; ++w) {
            widths[layer] = w;
            self(self, layer + 1, used + w);
        }
        widths[layer] = 0;
    };
    visit(visit, 0, 0);
    for (const auto& [p, count] : census.by_profile)
        if (p.total() > n) mismatch("profile " + p.to_string(), std::to_string(count), "out of range");

    if (!ok) {
        out << "FAIL k=" << k << "\n";
        err << "validation failed for k=" << k << "\n";
        return kValidationMismatch;
    }
    out << "sizes: " << (n + 2) << " keys match\n";
    out << "profiles: " << profiles_checked << " keys match (" << census.by_profile.size() << " occurring)\n";
    out << "PASS k=" << k << "\n";
    return kOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::dist: return cmd_dist(cfg, out, err);
            case Command::count: return cmd_count(cfg, out, err);
            case Command::maxsize: return cmd_maxsize(cfg, out, err);
            case Command::validate: return cmd_validate(cfg, out, err);
            case Command::plot_data: return cmd_plot_data(cfg, out, err);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    }
    return kInputError;
}

}  // namespace robdd::cli
