#pragma once

#include "robdd/bigpoly.hpp"

#include <cstddef>
#include <vector>

namespace robdd {

/// Pascal's triangle and Stirling numbers of the second kind, both indexed
/// 0..limit+1 in each coordinate.
///
/// Conventions: S(0,0) = 1 and S(m,0) = 0 for m > 0, so that the r = 0 member
/// of the linear-map family is the identity.
class CombinTables {
public:
    explicit CombinTables(std::size_t limit);

    std::size_t limit() const { return limit_; }

    /// C(m, j); zero for j > m. Indices must be <= limit + 1.
    const BigInt& binom(std::size_t m, std::size_t j) const;
    /// S(m, r); zero for r > m. Indices must be <= limit + 1.
    const BigInt& stirling2(std::size_t m, std::size_t r) const;

private:
    std::size_t at(std::size_t row, std::size_t col) const;

    std::size_t limit_;
    std::size_t side_;
    std::vector<BigInt> binom_;
    std::vector<BigInt> stirling_;
};

inline CombinTables build_tables(std::size_t limit) { return CombinTables(limit); }

}  // namespace robdd
