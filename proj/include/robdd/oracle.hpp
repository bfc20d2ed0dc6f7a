#pragma once

// Brute-force ground truth for small k: every truth table is reduced to its
// canonical ROBDD with a unique table, and sizes/profiles are tabulated.

#include "robdd/profilecount.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace robdd::oracle {

/// 2^k output bits; index bit (k - i) holds x_i, so x_1 is the most
/// significant bit of the assignment index.
class TruthTable {
public:
    TruthTable(unsigned k, std::vector<bool> bits);
    /// Table number `code` in lexicographic enumeration: bit a of `code` is
    /// f(a). Requires k <= 5.
    static TruthTable from_code(unsigned k, std::uint64_t code);

    unsigned k() const { return k_; }
    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t assignment) const { return bits_[assignment]; }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    unsigned k_;
    std::vector<bool> bits_;
};

using NodeRef = std::uint32_t;
inline constexpr NodeRef kFalse = 0;
inline constexpr NodeRef kTrue = 1;

struct Node {
    unsigned var;  // 1..k
    NodeRef low;
    NodeRef high;
    friend bool operator==(const Node&, const Node&) = default;
};

class Robdd {
public:
    explicit Robdd(unsigned k) : k_(k) {}

    unsigned k() const { return k_; }
    NodeRef root() const { return root_; }
    /// Number of decision nodes.
    std::size_t size() const { return nodes_.size(); }
    const Node& node(NodeRef ref) const { return nodes_.at(ref - 2); }
    static bool is_terminal(NodeRef ref) { return ref < 2; }

    Profile profile() const;
    bool evaluate(std::size_t assignment) const;

    /// Unique-table constructor: refuses low == high (returns low instead)
    /// and returns the existing node for a repeated (var, low, high).
    NodeRef make_node(unsigned var, NodeRef low, NodeRef high);
    void set_root(NodeRef root) { root_ = root; }

    /// Structural checks: no redundant test, no duplicate triple, variable
    /// indices increasing along every edge. Returns the first violation.
    std::optional<std::string> check_invariants() const;

    /// Same root structure, node numbering included.
    friend bool operator==(const Robdd& a, const Robdd& b) {
        return a.k_ == b.k_ && a.root_ == b.root_ && a.nodes_ == b.nodes_;
    }

private:
    struct KeyHash {
        std::size_t operator()(const Node& n) const noexcept {
            std::uint64_t h = n.var;
            h = h * 0x9E3779B97F4A7C15ull ^ n.low;
            h = h * 0x9E3779B97F4A7C15ull ^ n.high;
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    unsigned k_;
    NodeRef root_ = kFalse;
    std::vector<Node> nodes_;
    std::unordered_map<Node, NodeRef, KeyHash> unique_;
};

/// Canonical ROBDD of f under the order x_1 < x_2 < ... < x_k.
Robdd build_robdd(const TruthTable& f);

struct Census {
    unsigned k = 0;
    std::map<std::size_t, std::uint64_t> by_size;
    std::map<Profile, std::uint64_t> by_profile;
};

inline constexpr unsigned kMaxCensusK = 4;

struct CensusOptions {
    unsigned threads = 1;
    /// Test hook: flips output bit 0 of table number fault_code before
    /// reduction, so exactly one function is miscounted.
    std::optional<std::uint64_t> fault_code;
};

/// Histograms over all 2^{2^k} functions. k > kMaxCensusK is refused with
/// input_error.
Census census(unsigned k, const CensusOptions& options = {});

}  // namespace robdd::oracle
