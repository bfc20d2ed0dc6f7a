#include "robdd/oracle.hpp"

#include "robdd/errors.hpp"
#include "robdd/parallel.hpp"

#include <mutex>
#include <string>

namespace robdd::oracle {

TruthTable::TruthTable(unsigned k, std::vector<bool> bits) : k_(k), bits_(std::move(bits)) {
    if (k >= 8 * sizeof(std::size_t) - 1 || bits_.size() != (std::size_t{1} << k))
        throw input_error("truth table for k = " + std::to_string(k) + " needs exactly 2^k entries");
}

TruthTable TruthTable::from_code(unsigned k, std::uint64_t code) {
    if (k > 5) throw input_error("TruthTable::from_code supports k <= 5");
    std::vector<bool> bits(std::size_t{1} << k);
    for (std::size_t a = 0; a < bits.size(); ++a) bits[a] = (code >> a) & 1u;
    return TruthTable(k, std::move(bits));
}

NodeRef Robdd::make_node(unsigned var, NodeRef low, NodeRef high) {
    if (low == high) return low;
    const Node key{var, low, high};
    if (auto it = unique_.find(key); it != unique_.end()) return it->second;
    const auto ref = static_cast<NodeRef>(nodes_.size() + 2);
    nodes_.push_back(key);
    unique_.emplace(key, ref);
    return ref;
}

Profile Robdd::profile() const {
    std::vector<std::size_t> widths(k_, 0);
    for (const auto& n : nodes_) ++widths[n.var - 1];
    return Profile(std::move(widths));
}

bool Robdd::evaluate(std::size_t assignment) const {
    NodeRef cur = root_;
    while (!is_terminal(cur)) {
        const Node& n = node(cur);
        const bool bit = (assignment >> (k_ - n.var)) & 1u;
        cur = bit ? n.high : n.low;
    }
    return cur == kTrue;
}

std::optional<std::string> Robdd::check_invariants() const {
    std::unordered_map<Node, NodeRef, KeyHash> seen;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        const auto ref = static_cast<NodeRef>(i + 2);
        if (n.var < 1 || n.var > k_) return "node " + std::to_string(ref) + " has variable out of range";
        if (n.low == n.high) return "node " + std::to_string(ref) + " has low == high";
        if (!seen.emplace(n, ref).second) return "node " + std::to_string(ref) + " duplicates another node";
        for (NodeRef child : {n.low, n.high}) {
            if (is_terminal(child)) continue;
            if (child - 2 >= nodes_.size()) return "node " + std::to_string(ref) + " has a dangling child";
            if (node(child).var <= n.var) return "node " + std::to_string(ref) + " breaks the variable order";
        }
    }
    return std::nullopt;
}

namespace {

NodeRef reduce(Robdd& out, const TruthTable& f, unsigned var, std::size_t offset, std::size_t length) {
    if (length == 1) return f[offset] ? kTrue : kFalse;
    const std::size_t half = length / 2;
    const NodeRef low = reduce(out, f, var + 1, offset, half);
    const NodeRef high = reduce(out, f, var + 1, offset + half, half);
    return out.make_node(var, low, high);
}

}  // namespace

Robdd build_robdd(const TruthTable& f) {
    Robdd out(f.k());
    out.set_root(reduce(out, f, 1, 0, f.size()));
    return out;
}

Census census(unsigned k, const CensusOptions& options) {
    if (k > kMaxCensusK)
        throw input_error("census enumerates all 2^(2^k) functions; k = " + std::to_string(k) +
                          " is beyond the supported k <= " + std::to_string(kMaxCensusK));
    const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << k);
    const unsigned threads = resolve_threads(options.threads);
    const std::size_t shards = threads;

    std::vector<Census> partial(shards);
    parallel_for(shards, threads, [&](std::size_t s) {
        Census& local = partial[s];
        for (std::uint64_t code = s; code < functions; code += shards) {
            std::uint64_t bits = code;
            if (options.fault_code && *options.fault_code == code) bits ^= 1u;
            const Robdd bdd = build_robdd(TruthTable::from_code(k, bits));
            ++local.by_size[bdd.size()];
            ++local.by_profile[bdd.profile()];
        }
    });

    Census out;
    out.k = k;
    for (const auto& part : partial) {
        for (const auto& [size, count] : part.by_size) out.by_size[size] += count;
        for (const auto& [profile, count] : part.by_profile) out.by_profile[profile] += count;
    }
    return out;
}

}  // namespace robdd::oracle
