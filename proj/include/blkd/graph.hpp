#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace blkd {

// Undirected graph on vertices 0..n-1, adjacency held row-wise as bit
// vectors. No loops; rows stay symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bitset(std::size_t(n))) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        rows_[u].set(std::size_t(v));
        rows_[v].set(std::size_t(u));
    }
    bool has_edge(int u, int v) const { return u != v && rows_[u].test(std::size_t(v)); }
    const Bitset& row(int v) const { return rows_[v]; }
    std::size_t degree(int v) const { return rows_[v].count(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](std::size_t v) {
                if (int(v) > u) e.emplace_back(u, int(v));
            });
        return e;
    }

    // union of rows over a vertex set: N(X) (may include members of X)
    Bitset neighbours_of_set(const Bitset& x) const {
        Bitset r{std::size_t(n_)};
        x.for_each([&](std::size_t v) { r |= rows_[v]; });
        return r;
    }

    bool symmetric_irreflexive() const {
        for (int u = 0; u < n_; ++u) {
            if (rows_[u].test(std::size_t(u))) return false;
            for (int v = u + 1; v < n_; ++v)
                if (rows_[u].test(std::size_t(v)) != rows_[v].test(std::size_t(u))) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

inline bool is_anticomplete(const Graph& g, const Bitset& a, const Bitset& b) {
    bool clean = true;
    a.for_each([&](std::size_t v) {
        if (clean && g.row(int(v)).intersects(b)) clean = false;
    });
    return clean;
}
// every vertex of b has a neighbour in a
inline bool covers(const Graph& g, const Bitset& a, const Bitset& b) {
    Bitset nb = g.neighbours_of_set(a);
    return b.count_and(nb) == b.count();
}

// Blockade: a graph plus an ordered sequence of disjoint nonempty blocks.
// Blocks index into the global vertex space; vertices outside every block are
// allowed (the ordered-star construction keeps its deleted layer around).
struct Blockade {
    Graph g;
    std::vector<std::vector<int>> blocks;  // each sorted ascending
    std::vector<Bitset> block_bits;

    Blockade() = default;
    Blockade(Graph graph, std::vector<std::vector<int>> blks)
        : g(std::move(graph)), blocks(std::move(blks)) {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        rebuild_bits();
    }

    void rebuild_bits() {
        block_bits.clear();
        for (const auto& b : blocks) block_bits.push_back(Bitset::from_vector(std::size_t(g.n()), b));
    }

    int length() const { return int(blocks.size()); }
    std::size_t width() const {
        std::size_t w = blocks.empty() ? 0 : blocks[0].size();
        for (const auto& b : blocks) w = std::min(w, b.size());
        return w;
    }
    // block holding v, or -1
    int block_of(int v) const {
        for (int i = 0; i < length(); ++i)
            if (block_bits[i].test(std::size_t(v))) return i;
        return -1;
    }
    // restriction: same graph, blocks replaced by the given vertex sets
    Blockade restricted(const std::vector<Bitset>& sets) const {
        std::vector<std::vector<int>> bs;
        for (const auto& s : sets) bs.push_back(s.to_vector());
        return Blockade(g, std::move(bs));
    }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    int length = 0;
    std::size_t width = 0;
};

ValidationReport validate_blockade(const Blockade& b);

// Pattern graph; when ordered, vertex i must land in block i.
struct Pattern {
    Graph g;
    bool ordered = false;
};

enum class WitnessKind { rainbow, transversal, ordered_transversal };

std::string kind_name(WitnessKind k);
WitnessKind kind_from_name(const std::string& s);

struct Witness {
    WitnessKind kind = WitnessKind::transversal;
    std::vector<int> assignment;   // pattern vertex -> host vertex
    std::vector<int> blocks_used;  // pattern vertex -> block index
};

enum class WitnessFail {
    ok,
    size_mismatch,
    out_of_range,
    not_injective,
    host_not_in_block,
    block_multiplicity,
    adjacency_mismatch,
};

std::string witness_fail_name(WitnessFail f);

WitnessFail verify_witness_reason(const Blockade& b, const Pattern& p, const Witness& w);
inline bool verify_witness(const Blockade& b, const Pattern& p, const Witness& w) {
    return verify_witness_reason(b, p, w) == WitnessFail::ok;
}

// pattern factory
namespace patterns {
Pattern path(int k, bool ordered = false);
Pattern cycle(int k);
// S_t: centre is vertex 0, leaves 1..t
Pattern star(int t);
// ordered S_t^+ with the centre last: leaves 0..t-1, centre t
Pattern ordered_star_centre_last(int t);
// broom B(k,t): spine 0..k-1 a path, leaves k..k+t-1 at vertex k-1
Pattern broom(int k, int t);
// double broom B(k,s,t): spine 0..k-1, s leaves at vertex 0, t leaves at k-1
Pattern double_broom(int k, int s, int t);
}  // namespace patterns

}  // namespace blkd
