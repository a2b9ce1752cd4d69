#include "blkd/graph.hpp"

#include <algorithm>
#include <set>

namespace blkd {

ValidationReport validate_blockade(const Blockade& b) {
    ValidationReport r;
    r.length = b.length();
    if (!b.g.symmetric_irreflexive()) {
        r.ok = false;
        r.errors.push_back("adjacency not symmetric/irreflexive");
    }
    std::set<int> seen;
    for (int i = 0; i < b.length(); ++i) {
        const auto& blk = b.blocks[i];
        if (blk.empty()) {
            r.ok = false;
            r.errors.push_back("block " + std::to_string(i) + " is empty");
            continue;
        }
        for (int v : blk) {
            if (v < 0 || v >= b.g.n()) {
                r.ok = false;
                r.errors.push_back("block " + std::to_string(i) + ": vertex " + std::to_string(v) +
                                   " out of range");
            } else if (!seen.insert(v).second) {
                r.ok = false;
                r.errors.push_back("vertex " + std::to_string(v) + " appears in two blocks");
            }
        }
    }
    r.width = r.ok ? b.width() : 0;
    return r;
}

std::string kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::rainbow: return "rainbow";
        case WitnessKind::transversal: return "transversal";
        case WitnessKind::ordered_transversal: return "ordered-transversal";
    }
    return "?";
}

WitnessKind kind_from_name(const std::string& s) {
    if (s == "rainbow") return WitnessKind::rainbow;
    if (s == "transversal") return WitnessKind::transversal;
    if (s == "ordered-transversal" || s == "ordered") return WitnessKind::ordered_transversal;
    throw std::invalid_argument("unknown copy kind '" + s + "'");
}

std::string witness_fail_name(WitnessFail f) {
    switch (f) {
        case WitnessFail::ok: return "ok";
        case WitnessFail::size_mismatch: return "size-mismatch";
        case WitnessFail::out_of_range: return "out-of-range";
        case WitnessFail::not_injective: return "not-injective";
        case WitnessFail::host_not_in_block: return "host-not-in-block";
        case WitnessFail::block_multiplicity: return "block-multiplicity";
        case WitnessFail::adjacency_mismatch: return "adjacency-mismatch";
    }
    return "?";
}

WitnessFail verify_witness_reason(const Blockade& b, const Pattern& p, const Witness& w) {
    const int k = p.g.n();
    const int K = b.length();
    if (int(w.assignment.size()) != k || int(w.blocks_used.size()) != k)
        return WitnessFail::size_mismatch;
    switch (w.kind) {
        case WitnessKind::rainbow:
            if (k > K) return WitnessFail::size_mismatch;
            break;
        case WitnessKind::transversal:
        case WitnessKind::ordered_transversal:
            if (k != K) return WitnessFail::size_mismatch;
            break;
    }

    std::set<int> hosts;
    std::set<int> blocks;
    for (int i = 0; i < k; ++i) {
        int v = w.assignment[i];
        int bi = w.blocks_used[i];
        if (v < 0 || v >= b.g.n() || bi < 0 || bi >= K) return WitnessFail::out_of_range;
        if (!hosts.insert(v).second) return WitnessFail::not_injective;
        if (!b.block_bits[bi].test(std::size_t(v))) return WitnessFail::host_not_in_block;
        if (!blocks.insert(bi).second) return WitnessFail::block_multiplicity;
        if (w.kind == WitnessKind::ordered_transversal && bi != i)
            return WitnessFail::block_multiplicity;
    }
    if (w.kind != WitnessKind::rainbow && int(blocks.size()) != K)
        return WitnessFail::block_multiplicity;

    // induced isomorphism through the assignment, both directions
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p.g.has_edge(i, j) != b.g.has_edge(w.assignment[i], w.assignment[j]))
                return WitnessFail::adjacency_mismatch;
    return WitnessFail::ok;
}

namespace patterns {

Pattern path(int k, bool ordered) {
    Pattern p{Graph(k), ordered};
    for (int i = 0; i + 1 < k; ++i) p.g.add_edge(i, i + 1);
    return p;
}

Pattern cycle(int k) {
    Pattern p{Graph(k), false};
    for (int i = 0; i < k; ++i) p.g.add_edge(i, (i + 1) % k);
    return p;
}

Pattern star(int t) {
    Pattern p{Graph(t + 1), false};
    for (int i = 1; i <= t; ++i) p.g.add_edge(0, i);
    return p;
}

Pattern ordered_star_centre_last(int t) {
    Pattern p{Graph(t + 1), true};
    for (int i = 0; i < t; ++i) p.g.add_edge(i, t);
    return p;
}

Pattern broom(int k, int t) {
    Pattern p{Graph(k + t), false};
    for (int i = 0; i + 1 < k; ++i) p.g.add_edge(i, i + 1);
    for (int j = 0; j < t; ++j) p.g.add_edge(k - 1, k + j);
    return p;
}

Pattern double_broom(int k, int s, int t) {
    Pattern p{Graph(k + s + t), false};
    for (int i = 0; i + 1 < k; ++i) p.g.add_edge(i, i + 1);
    for (int j = 0; j < s; ++j) p.g.add_edge(0, k + j);
    for (int j = 0; j < t; ++j) p.g.add_edge(k - 1, k + s + j);
    return p;
}

}  // namespace patterns

}  // namespace blkd
