#pragma once

#include "robdd/bigpoly.hpp"
#include "robdd/linmap.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace robdd {

/// Layer widths <p_1, ..., p_k>: p_i decision nodes labelled x_i.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::vector<std::size_t> widths) : widths_(std::move(widths)) {}

    /// Validating constructor for untrusted input; throws input_error on a
    /// negative entry.
    static Profile from_signed(std::span<const long long> widths);

    std::size_t length() const { return widths_.size(); }
    std::size_t total() const;
    std::span<const std::size_t> widths() const { return widths_; }

    /// The first j layers.
    Profile prefix(std::size_t j) const;

    std::string to_string() const;

    friend auto operator<=>(const Profile&, const Profile&) = default;

private:
    std::vector<std::size_t> widths_;
};

/// Number of multientry ROBDDs with profile p fed by m half-edges:
/// (phi_{p_k} o ... o phi_{p_1})[X^m] at X = 2.
///
/// The table must satisfy table.n() >= m + p.total(). m < 0 is an input error.
BigInt count_multientry(const Profile& p, long long m, const PhiTable& table);

/// ROBDDs (single root) with profile p; the m = 1 case.
BigInt count_robdds_with_profile(const Profile& p, const PhiTable& table);

/// The intermediate polynomials phi_{p_j} o ... o phi_{p_1}[X^m] for
/// j = 0..k (so the result has k+1 entries, the first being X^m).
std::vector<XPoly> profile_iterates(const Profile& p, std::size_t m, const PhiTable& table);

/// Smallest table size bound that serves count_multientry(p, m, .).
std::size_t table_bound_for(const Profile& p, std::size_t m);

}  // namespace robdd
