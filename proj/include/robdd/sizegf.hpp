#pragma once

// Size distribution of Boolean functions in k variables by ROBDD size.
//
// The bivariate map varphi[X^m] = sum_i u^i phi_i[X^m] adds one layer; the
// generating function is F_k(u) = (varphi^k[X])_{X=2}. Evaluation at X = 2
// happens at level 0 (X^m -> 2^m) and is pushed up level by level, so only
// univariate polynomials in u are ever stored.
//
// Precision. Entry m of a level only feeds the final answer through terms
// carrying at least u^{m-1}, so it is stored modulo u^{n+2-m} (entry 0 and 1
// keep the full cap n). This is exactly what keeps the index range closed at
// m <= n+1: a term of varphi[X^m] on X^j carries u^i with i >= j - m, so
// j > n+1 can only land above the precision of entry m.

#include "robdd/bigpoly.hpp"
#include "robdd/linmap.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace robdd {

/// Largest ROBDD size over k variables: 2^{k-t} - 3 + 2^{2^t} with
/// t = floor(log2(k - floor(log2 k))). Requires 1 <= k <= 62.
std::uint64_t max_size(long long k);

/// Highest u-degree kept for entry m under size bound n.
inline std::size_t entry_precision(std::size_t n, std::size_t m) { return m <= 1 ? n : n + 1 - m; }

/// Entries m = 0..level_width(k, n, l) are needed at level l of a k-layer
/// run: the top level uses m = 1 only and each layer at most doubles the
/// half-edge count. Never more than n+1.
std::size_t level_width(unsigned k, std::size_t n, unsigned level);

/// varphi[X^m] for m = 0..n+1, regrouped by powers of X.
class VarphiBasis {
public:
    VarphiBasis(const PhiTable& table, std::size_t n);

    std::size_t cap() const { return cap_; }
    std::size_t size() const { return entries_.size(); }
    const BiPoly& entry(std::size_t m) const { return entries_.at(m); }

private:
    std::size_t cap_;
    std::vector<BiPoly> entries_;
};

inline VarphiBasis build_varphi_basis(const PhiTable& table, std::size_t n) { return VarphiBasis(table, n); }

/// (varphi^level[X^m])_{X=2} for m = 0..polys.size()-1; polys[m] has cap
/// entry_precision(cap, m).
struct MemoLevel {
    std::size_t level = 0;
    std::size_t cap = 0;
    std::vector<UPoly> polys;

    friend bool operator==(const MemoLevel&, const MemoLevel&) = default;
};

/// Level 0: entry m is the constant 2^m.
MemoLevel base_level(std::size_t n, std::size_t width);

/// One layer on top of prev through the stored basis, for m = 0..width.
/// prev must hold entries up to min(2 * width, n + 1).
MemoLevel next_level(const MemoLevel& prev, const VarphiBasis& basis, std::size_t width, unsigned threads = 1);
MemoLevel next_level(const MemoLevel& prev, const VarphiBasis& basis);

/// F_k^{<=n}(u) through a precomputed table (needs table.n() >= n).
UPoly distribution(unsigned k, std::size_t n, const PhiTable& table, unsigned threads = 1);

struct EngineOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    /// Start from this level instead of level 0 when set; must belong to the
    /// same (k, n) run.
    std::optional<MemoLevel> resume_from;
    /// Called after every computed level (not for the resumed one).
    std::function<void(const MemoLevel&)> on_level;
};

/// One layer on top of prev with the phi rows streamed instead of stored:
/// O(n^2) live coefficients instead of O(n^3).
MemoLevel next_level_streamed(const MemoLevel& prev, std::size_t width, unsigned threads);

/// F_k^{<=n}(u) without a stored table. This is the production path.
UPoly distribution(unsigned k, std::size_t n, const EngineOptions& options = {});

/// Rough upper estimate of resident bytes for a streamed run.
std::uint64_t estimate_live_bytes(unsigned k, std::size_t n, unsigned threads);

}  // namespace robdd
