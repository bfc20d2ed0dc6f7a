#include "robdd/linmap.hpp"

#include "robdd/errors.hpp"

#include <algorithm>
#include <string>

namespace robdd {

XPoly next_p_poly(const XPoly& p_r, std::size_t r) {
    // X^2 - X - r
    std::vector<BigInt> factor{-BigInt(static_cast<unsigned long>(r)), -1, 1};
    return p_r * XPoly(std::move(factor));
}

XPoly q_poly(std::size_t r, std::size_t m, const CombinTables& tables) {
    if (r > m) return {};
    std::vector<BigInt> c(m - r + 1);
    for (std::size_t j = 0; j <= m - r; ++j) c[j] = tables.binom(m, j) * tables.stirling2(m - j, r);
    return XPoly(std::move(c));
}

PhiTable::PhiTable(std::size_t n, const CombinTables& tables) : n_(n) {
    if (tables.limit() < n + 1)
        throw contract_violation("PhiTable: combinatorial tables limit " + std::to_string(tables.limit()) +
                                 " < n + 1 = " + std::to_string(n + 1));
    p_polys_.reserve(n + 1);
    p_polys_.push_back(XPoly{1});
    for (std::size_t r = 1; r <= n; ++r) p_polys_.push_back(next_p_poly(p_polys_.back(), r - 1));

    by_m_.resize(n + 2);
    for (std::size_t m = 0; m <= n + 1; ++m) {
        const std::size_t width = std::min(m, n);
        by_m_[m].reserve(width + 1);
        for (std::size_t r = 0; r <= width; ++r) by_m_[m].push_back(p_polys_[r] * q_poly(r, m, tables));
    }
}

const XPoly& PhiTable::entry(std::size_t r, std::size_t m) const {
    static const XPoly zero;
    if (r > n_ || m > n_ + 1)
        throw contract_violation("PhiTable: entry (" + std::to_string(r) + ", " + std::to_string(m) +
                                 ") outside table with n = " + std::to_string(n_));
    return r < by_m_[m].size() ? by_m_[m][r] : zero;
}

const XPoly& PhiTable::p_poly(std::size_t r) const {
    if (r > n_) throw contract_violation("PhiTable: P_" + std::to_string(r) + " not tabulated");
    return p_polys_[r];
}

XPoly apply_phi(std::size_t r, const XPoly& p, const PhiTable& table) {
    if (r > table.n())
        throw contract_violation("apply_phi: width " + std::to_string(r) + " > table n " +
                                 std::to_string(table.n()));
    if (p.degree() > static_cast<long>(table.n()) + 1)
        throw contract_violation("apply_phi: degree " + std::to_string(p.degree()) + " > table n + 1");
    if (r == 0) return p;
    XPoly out;
    for (std::size_t m = r; m < p.size(); ++m) out.add_scaled(table.entry(r, m), p[m]);
    return out;
}

// ---------------------------------------------------------------- PhiRowStream

PhiRowStream::PhiRowStream(std::size_t max_x_degree) : max_x_degree_(max_x_degree) { row_.push_back(XPoly{1}); }

void PhiRowStream::advance(std::size_t max_width) {
    const std::size_t width = std::min(m_ + 1, max_width);
    std::vector<XPoly> next;
    next.reserve(width + 1);
    BigInt tmp;
    for (std::size_t r = 0; r <= width; ++r) {
        const XPoly* same = r < row_.size() ? &row_[r] : nullptr;      // phi_r[X^m]
        const XPoly* below = r >= 1 && r - 1 < row_.size() ? &row_[r - 1] : nullptr;  // phi_{r-1}[X^m]
        std::size_t len = 0;
        if (same && !same->is_zero()) len = std::max(len, same->size() + 1);
        if (below && !below->is_zero()) len = std::max(len, below->size() + 2);
        len = std::min(len, max_x_degree_ + 1);
        std::vector<BigInt> c(len);
        if (same) {
            const auto s = same->coeffs();
            const unsigned long rr = static_cast<unsigned long>(r);
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (j < len) mpz_addmul_ui(c[j].get_mpz_t(), s[j].get_mpz_t(), rr);
                if (j + 1 < len) c[j + 1] += s[j];
            }
        }
        if (below) {
            const auto b = below->coeffs();
            const unsigned long rm1 = static_cast<unsigned long>(r - 1);
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (j < len) mpz_submul_ui(c[j].get_mpz_t(), b[j].get_mpz_t(), rm1);
                if (j + 1 < len) c[j + 1] -= b[j];
                if (j + 2 < len) c[j + 2] += b[j];
            }
        }
        next.emplace_back(std::move(c));
    }
    row_ = std::move(next);
    ++m_;
}

}  // namespace robdd
