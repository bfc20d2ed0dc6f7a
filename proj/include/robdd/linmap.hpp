#pragma once

// The family of linear maps phi_r : Z[X] -> Z[X] on the monomial basis,
//
//   phi_r[X^m] = P_r(X) * Q_{r,m}(X)
//   P_r        = prod_{i<r} (X^2 - X - i)
//   Q_{r,m}    = sum_{j=0}^{m-r} C(m,j) S(m-j,r) X^j
//
// phi_r turns m incoming half-edges attached to a layer of r fresh decision
// nodes into the signed combination of free half-edge counts below it.

#include "robdd/bigpoly.hpp"
#include "robdd/combin.hpp"

#include <cstddef>
#include <vector>

namespace robdd {

/// P_{r+1} from P_r.
XPoly next_p_poly(const XPoly& p_r, std::size_t r);

/// Q_{r,m} read off the combinatorial tables (r, m <= tables.limit() + 1).
XPoly q_poly(std::size_t r, std::size_t m, const CombinTables& tables);

/// phi_r[X^m] for 0 <= r <= n, 0 <= m <= n+1, built once and then read-only.
class PhiTable {
public:
    PhiTable(std::size_t n, const CombinTables& tables);

    std::size_t n() const { return n_; }
    /// phi_r[X^m]; the zero polynomial when r > m.
    const XPoly& entry(std::size_t r, std::size_t m) const;
    const XPoly& p_poly(std::size_t r) const;

private:
    std::size_t n_;
    std::vector<XPoly> p_polys_;
    std::vector<std::vector<XPoly>> by_m_;  // by_m_[m][r] for r <= min(m, n)
};

inline PhiTable build_phi_table(std::size_t n, const CombinTables& tables) { return PhiTable(n, tables); }

/// phi_r[p] by linearity over the table. Needs r <= table.n() and
/// deg p <= table.n() + 1.
XPoly apply_phi(std::size_t r, const XPoly& p, const PhiTable& table);

/// Streams the rows (phi_0[X^m], phi_1[X^m], ...) for m = 0, 1, 2, ... using
///
///   phi_r[X^{m+1}] = (X + r) phi_r[X^m] + (X^2 - X - (r-1)) phi_{r-1}[X^m]
///
/// which follows from Q_{r,m+1} = (X + r) Q_{r,m} + Q_{r-1,m}. Each step costs
/// O(width * degree) integer operations and only the current row is kept.
/// Coefficients of X^j for j > max_x_degree are dropped; the recurrence never
/// moves mass downward in degree, so what is kept stays exact.
class PhiRowStream {
public:
    explicit PhiRowStream(std::size_t max_x_degree);

    std::size_t m() const { return m_; }
    std::size_t max_x_degree() const { return max_x_degree_; }
    /// row()[r] = phi_r[X^m] truncated, for r < row().size().
    const std::vector<XPoly>& row() const { return row_; }

    /// Moves to m+1 keeping widths r <= min(m+1, max_width). Widths dropped
    /// here can never be recovered later.
    void advance(std::size_t max_width);

private:
    std::size_t max_x_degree_;
    std::size_t m_ = 0;
    std::vector<XPoly> row_;
};

}  // namespace robdd
