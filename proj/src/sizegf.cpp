#include "robdd/sizegf.hpp"

#include "robdd/errors.hpp"
#include "robdd/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace robdd {

std::uint64_t max_size(long long k) {
    if (k < 1) throw input_error("max_size needs k >= 1, got " + std::to_string(k));
    if (k > 62) throw input_error("max_size: k = " + std::to_string(k) + " overflows 64-bit sizes");
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t log_k = std::bit_width(uk) - 1;
    const std::uint64_t theta = std::bit_width(uk - log_k) - 1;
    return (std::uint64_t{1} << (uk - theta)) - 3 + (std::uint64_t{1} << (std::uint64_t{1} << theta));
}

std::size_t level_width(unsigned k, std::size_t n, unsigned level) {
    if (level > k) throw contract_violation("level_width: level " + std::to_string(level) + " > k");
    const unsigned above = k - level;
    if (above >= 63) return n + 1;
    return static_cast<std::size_t>(std::min<std::uint64_t>(n + 1, std::uint64_t{1} << above));
}

// ---------------------------------------------------------------- VarphiBasis

VarphiBasis::VarphiBasis(const PhiTable& table, std::size_t n) : cap_(n) {
    if (table.n() < n)
        throw contract_violation("VarphiBasis: table n " + std::to_string(table.n()) + " < " + std::to_string(n));
    entries_.reserve(n + 2);
    for (std::size_t m = 0; m <= n + 1; ++m) {
        BiPoly entry(n);
        for (std::size_t r = 0; r <= std::min(m, n); ++r) entry.add_term(r, table.entry(r, m));
        entries_.push_back(std::move(entry));
    }
}

// ---------------------------------------------------------------- levels

MemoLevel base_level(std::size_t n, std::size_t width) {
    MemoLevel out;
    out.level = 0;
    out.cap = n;
    out.polys.reserve(width + 1);
    for (std::size_t m = 0; m <= width; ++m) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), 2, m);
        out.polys.emplace_back(entry_precision(n, m), std::vector<BigInt>{power});
    }
    return out;
}

namespace {

void check_level_inputs(const MemoLevel& prev, std::size_t width) {
    const std::size_t n = prev.cap;
    if (width > n + 1) throw contract_violation("next_level: width " + std::to_string(width) + " > n + 1");
    const std::size_t needed = std::min(2 * width, n + 1);
    if (prev.polys.size() <= needed)
        throw contract_violation("next_level: previous level holds entries up to " +
                                 std::to_string(prev.polys.size()) + " - 1, need " + std::to_string(needed));
}

// acc[i + e] += c * src[e] for i + e < acc.size()
inline void accumulate_shifted(std::vector<BigInt>& acc, std::size_t i, const BigInt& c,
                               std::span<const BigInt> src) {
    if (i >= acc.size()) return;
    const std::size_t emax = std::min(src.size(), acc.size() - i);
    for (std::size_t e = 0; e < emax; ++e) mpz_addmul(acc[i + e].get_mpz_t(), c.get_mpz_t(), src[e].get_mpz_t());
}

// Entry m of the next level from the row phi_0[X^m], phi_1[X^m], ...
UPoly entry_from_row(std::size_t m, std::span<const XPoly> row, const MemoLevel& prev) {
    const std::size_t cap_m = entry_precision(prev.cap, m);
    std::vector<BigInt> acc(cap_m + 1);
    const std::size_t imax = std::min(row.size(), cap_m + 1);
    for (std::size_t i = 0; i < imax; ++i) {
        const auto phi = row[i].coeffs();
        for (std::size_t j = 0; j < phi.size(); ++j) {
            if (sgn(phi[j]) == 0) continue;
            if (j >= prev.polys.size())
                throw contract_violation("next_level: X^" + std::to_string(j) + " has no entry in previous level");
            accumulate_shifted(acc, i, phi[j], prev.polys[j].coeffs());
        }
    }
    return UPoly(cap_m, std::move(acc));
}

}  // namespace

MemoLevel next_level(const MemoLevel& prev, const VarphiBasis& basis, std::size_t width, unsigned threads) {
    const std::size_t n = prev.cap;
    if (basis.cap() != n) throw contract_violation("next_level: basis cap differs from level cap");
    check_level_inputs(prev, width);
    if (basis.size() <= width) throw contract_violation("next_level: basis too small");

    MemoLevel out;
    out.level = prev.level + 1;
    out.cap = n;
    out.polys.assign(width + 1, UPoly(0));
    parallel_for(width + 1, threads, [&](std::size_t m) {
        const std::size_t cap_m = entry_precision(n, m);
        std::vector<BigInt> acc(cap_m + 1);
        const auto by_x = basis.entry(m).by_x_degree();
        for (std::size_t j = 0; j < by_x.size() && j <= n + 1; ++j) {
            const auto coeff = by_x[j].coeffs();
            if (coeff.empty()) continue;
            if (j >= prev.polys.size())
                throw contract_violation("next_level: X^" + std::to_string(j) + " has no entry in previous level");
            // terms of X^j carry u^i with i >= j - m; nothing below that is stored
            for (std::size_t i = 0; i < coeff.size(); ++i)
                if (sgn(coeff[i]) != 0) accumulate_shifted(acc, i, coeff[i], prev.polys[j].coeffs());
        }
        out.polys[m] = UPoly(cap_m, std::move(acc));
    });
    return out;
}

MemoLevel next_level(const MemoLevel& prev, const VarphiBasis& basis) {
    return next_level(prev, basis, prev.cap + 1, 1);
}

UPoly distribution(unsigned k, std::size_t n, const PhiTable& table, unsigned threads) {
    const VarphiBasis basis(table, n);
    MemoLevel level = base_level(n, level_width(k, n, 0));
    for (unsigned l = 1; l <= k; ++l) level = next_level(level, basis, level_width(k, n, l), threads);
    return level.polys[1];
}

MemoLevel next_level_streamed(const MemoLevel& prev, std::size_t width, unsigned threads) {
    check_level_inputs(prev, width);
    const std::size_t n = prev.cap;
    threads = resolve_threads(threads);

    MemoLevel out;
    out.level = prev.level + 1;
    out.cap = n;
    out.polys.assign(width + 1, UPoly(0));

    PhiRowStream stream(std::min(n + 1, prev.polys.size() - 1));
    // Row m only needs widths r <= entry_precision(n, m) = n + 1 - m.
    auto step = [&](std::size_t m) {
        if (m < width) stream.advance(n - m);
    };

    if (threads == 1) {
        for (std::size_t m = 0; m <= width; ++m) {
            out.polys[m] = entry_from_row(m, stream.row(), prev);
            step(m);
        }
        return out;
    }

    const std::size_t chunk = 2 * static_cast<std::size_t>(threads);
    std::vector<std::vector<XPoly>> rows;
    for (std::size_t m0 = 0; m0 <= width; m0 += chunk) {
        const std::size_t m1 = std::min(width + 1, m0 + chunk);
        rows.clear();
        for (std::size_t m = m0; m < m1; ++m) {
            rows.push_back(stream.row());
            step(m);
        }
        parallel_for(m1 - m0, threads,
                     [&](std::size_t t) { out.polys[m0 + t] = entry_from_row(m0 + t, rows[t], prev); });
    }
    return out;
}

UPoly distribution(unsigned k, std::size_t n, const EngineOptions& options) {
    const unsigned threads = resolve_threads(options.threads);
    MemoLevel level;
    if (options.resume_from) {
        level = *options.resume_from;
        if (level.cap != n || level.level > k || level.polys.size() != level_width(k, n, level.level) + 1)
            throw contract_violation("distribution: resume level does not belong to this (k, n) run");
    } else {
        level = base_level(n, level_width(k, n, 0));
    }
    for (unsigned l = static_cast<unsigned>(level.level) + 1; l <= k; ++l) {
        level = next_level_streamed(level, level_width(k, n, l), threads);
        if (options.on_level) options.on_level(level);
    }
    return level.polys[1];
}

std::uint64_t estimate_live_bytes(unsigned k, std::size_t n, unsigned threads) {
    threads = resolve_threads(threads);
    const double nn = static_cast<double>(n);
    // coefficient bit length is O(n log n)
    const double bits = nn * std::log2(nn + 2.0) + 64.0;
    const double per_coeff = 32.0 + bits / 8.0;
    const std::size_t width = level_width(k, n, 0);
    const double memo_slots = 2.0 * (static_cast<double>(width) + 1.0) * (nn + 1.0);
    const double row_slots = (nn / 2.0 + 1.0) * (nn + 2.0);
    const double rows_live = threads == 1 ? 2.0 : 2.0 * threads + 2.0;
    return static_cast<std::uint64_t>((memo_slots + rows_live * row_slots) * per_coeff);
}

}  // namespace robdd
