#include "robdd/profilecount.hpp"

#include "robdd/errors.hpp"

#include <numeric>

namespace robdd {

Profile Profile::from_signed(std::span<const long long> widths) {
    std::vector<std::size_t> out;
    out.reserve(widths.size());
    for (long long w : widths) {
        if (w < 0) throw input_error("profile entries must be non-negative, got " + std::to_string(w));
        out.push_back(static_cast<std::size_t>(w));
    }
    return Profile(std::move(out));
}

std::size_t Profile::total() const { return std::accumulate(widths_.begin(), widths_.end(), std::size_t{0}); }

Profile Profile::prefix(std::size_t j) const {
    if (j > widths_.size()) throw contract_violation("Profile::prefix beyond length");
    return Profile(std::vector<std::size_t>(widths_.begin(), widths_.begin() + j));
}

std::string Profile::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < widths_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(widths_[i]);
    }
    return s + ">";
}

std::vector<XPoly> profile_iterates(const Profile& p, std::size_t m, const PhiTable& table) {
    std::vector<XPoly> out;
    out.reserve(p.length() + 1);
    out.push_back(XPoly::monomial(m));
    for (std::size_t r : p.widths()) out.push_back(apply_phi(r, out.back(), table));
    return out;
}

BigInt count_multientry(const Profile& p, long long m, const PhiTable& table) {
    if (m < 0) throw input_error("half-edge count must be non-negative, got " + std::to_string(m));
    return profile_iterates(p, static_cast<std::size_t>(m), table).back().eval(2);
}

BigInt count_robdds_with_profile(const Profile& p, const PhiTable& table) { return count_multientry(p, 1, table); }

std::size_t table_bound_for(const Profile& p, std::size_t m) { return m + p.total(); }

}  // namespace robdd
