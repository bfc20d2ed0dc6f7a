#include "robdd/combin.hpp"

#include "robdd/errors.hpp"

#include <string>

namespace robdd {

CombinTables::CombinTables(std::size_t limit)
    : limit_(limit), side_(limit + 2), binom_(side_ * side_), stirling_(side_ * side_) {
    for (std::size_t m = 0; m < side_; ++m) {
        binom_[at(m, 0)] = 1;
        for (std::size_t j = 1; j <= m; ++j) binom_[at(m, j)] = binom_[at(m - 1, j - 1)] + binom_[at(m - 1, j)];
    }
    stirling_[at(0, 0)] = 1;
    for (std::size_t m = 1; m < side_; ++m)
        for (std::size_t r = 1; r <= m; ++r)
            stirling_[at(m, r)] = BigInt(static_cast<unsigned long>(r)) * stirling_[at(m - 1, r)] +
                                  stirling_[at(m - 1, r - 1)];
}

std::size_t CombinTables::at(std::size_t row, std::size_t col) const {
    if (row >= side_ || col >= side_)
        throw contract_violation("CombinTables: index (" + std::to_string(row) + ", " + std::to_string(col) +
                                 ") beyond limit " + std::to_string(limit_));
    return row * side_ + col;
}

const BigInt& CombinTables::binom(std::size_t m, std::size_t j) const { return binom_[at(m, j)]; }

const BigInt& CombinTables::stirling2(std::size_t m, std::size_t r) const { return stirling_[at(m, r)]; }

}  // namespace robdd
