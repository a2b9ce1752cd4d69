#include "blkd/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace blkd {

namespace {

struct BudgetExceeded {};

void automorphism_dfs(const Graph& g, std::vector<int>& perm, std::vector<bool>& used,
                      std::vector<std::vector<int>>& out) {
    const int k = g.n();
    int d = int(perm.size());
    if (d == k) {
        out.push_back(perm);
        return;
    }
    for (int v = 0; v < k; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int u = 0; u < d && ok; ++u)
            if (g.has_edge(u, d) != g.has_edge(perm[u], v)) ok = false;
        if (!ok) continue;
        perm.push_back(v);
        used[v] = true;
        automorphism_dfs(g, perm, used, out);
        perm.pop_back();
        used[v] = false;
    }
}

// DFS over pattern vertices in a fixed order; sigma maps pattern vertex ->
// position in `blocks` (a list of host vertex sets). Counts completions or
// stops at the first, collecting the assignment.
struct Searcher {
    const Graph& g;
    const Pattern& p;
    const std::vector<const Bitset*>& blocks;
    const std::vector<int>& sigma;
    const std::vector<int>& order;
    std::uint64_t& nodes;
    std::uint64_t max_nodes;
    bool counting;
    Int count = 0;
    std::vector<int> host;
    bool done = false;

    Searcher(const Graph& g_, const Pattern& p_, const std::vector<const Bitset*>& blocks_,
             const std::vector<int>& sigma_, const std::vector<int>& order_, std::uint64_t& nodes_,
             std::uint64_t max_nodes_, bool counting_)
        : g(g_), p(p_), blocks(blocks_), sigma(sigma_), order(order_), nodes(nodes_),
          max_nodes(max_nodes_), counting(counting_), host(std::size_t(p_.g.n()), -1) {}

    void run(int depth) {
        const int k = p.g.n();
        if (depth == k) {
            if (counting)
                ++count;
            else
                done = true;
            return;
        }
        int pv = order[std::size_t(depth)];
        Bitset cand = *blocks[std::size_t(sigma[std::size_t(pv)])];
        for (int d2 = 0; d2 < depth; ++d2) {
            int pu = order[std::size_t(d2)];
            if (p.g.has_edge(pv, pu))
                cand &= g.row(host[std::size_t(pu)]);
            else
                cand.and_not(g.row(host[std::size_t(pu)]));
        }
        for (std::size_t v = cand.first_set(); v < cand.size(); v = cand.next_set(v + 1)) {
            if (++nodes > max_nodes) throw BudgetExceeded{};
            host[std::size_t(pv)] = int(v);
            run(depth + 1);
            if (done) return;
        }
        host[std::size_t(pv)] = -1;
    }
};

std::vector<int> natural_order(int k) {
    std::vector<int> o(static_cast<std::size_t>(k));
    std::iota(o.begin(), o.end(), 0);
    return o;
}

// ascending host-block size, ties by pattern index
std::vector<int> size_order(int k, const std::vector<int>& sigma,
                            const std::vector<const Bitset*>& blocks) {
    auto o = natural_order(k);
    std::stable_sort(o.begin(), o.end(), [&](int a, int bb) {
        return blocks[std::size_t(sigma[std::size_t(a)])]->count() <
               blocks[std::size_t(sigma[std::size_t(bb)])]->count();
    });
    return o;
}

void check_preconditions(const Blockade& b, const Pattern& p, WitnessKind kind) {
    const int k = p.g.n();
    if (k < 1) throw std::invalid_argument("oracle: empty pattern");
    if (k > 9) throw std::invalid_argument("oracle: pattern too large for exhaustive search");
    if (kind == WitnessKind::rainbow) {
        if (k > b.length()) throw std::invalid_argument("oracle: |pattern| > blockade length");
    } else {
        if (k != b.length()) throw std::invalid_argument("oracle: |pattern| != blockade length");
    }
}

// subsets of {0..K-1} of size k in lexicographic order
bool next_subset(std::vector<int>& c, int K) {
    int k = int(c.size());
    int i = k - 1;
    while (i >= 0 && c[std::size_t(i)] == K - k + i) --i;
    if (i < 0) return false;
    ++c[std::size_t(i)];
    for (int t = i + 1; t < k; ++t) c[std::size_t(t)] = c[std::size_t(t - 1)] + 1;
    return true;
}

}  // namespace

std::vector<std::vector<int>> pattern_automorphisms(const Pattern& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm;
    std::vector<bool> used(std::size_t(p.g.n()), false);
    automorphism_dfs(p.g, perm, used, out);
    return out;
}

std::vector<std::vector<int>> bijection_coset_reps(const Pattern& p) {
    const int k = p.g.n();
    auto aut = pattern_automorphisms(p);
    std::vector<std::vector<int>> reps;
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool minimal = true;
        for (const auto& a : aut) {
            // sigma ∘ a vs sigma, lexicographic
            for (int i = 0; i < k; ++i) {
                int lhs = sigma[std::size_t(a[std::size_t(i)])];
                int rhs = sigma[std::size_t(i)];
                if (lhs != rhs) {
                    if (lhs < rhs) minimal = false;
                    break;
                }
            }
            if (!minimal) break;
        }
        if (minimal) reps.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return reps;
}

FindResult find_copy(const Blockade& b, const Pattern& p, WitnessKind kind, SearchBudget budget) {
    check_preconditions(b, p, kind);
    const int k = p.g.n();
    const int K = b.length();
    FindResult res;

    std::vector<std::vector<int>> reps;
    if (kind == WitnessKind::ordered_transversal)
        reps.push_back(natural_order(k));
    else
        reps = bijection_coset_reps(p);

    std::vector<int> subset(std::size_t(std::min(k, K)));
    std::iota(subset.begin(), subset.end(), 0);

    try {
        do {
            for (const auto& sigma : reps) {
                std::vector<const Bitset*> blocks;
                for (int bi : subset) blocks.push_back(&b.block_bits[std::size_t(bi)]);
                auto order = natural_order(k);
                Searcher s(b.g, p, blocks, sigma, order, res.nodes, budget.max_nodes, false);
                s.run(0);
                if (s.done) {
                    Witness w;
                    w.kind = kind;
                    w.assignment = s.host;
                    w.blocks_used.resize(std::size_t(k));
                    for (int i = 0; i < k; ++i)
                        w.blocks_used[std::size_t(i)] = subset[std::size_t(sigma[std::size_t(i)])];
                    res.status = SearchStatus::found;
                    res.witness = w;
                    return res;
                }
            }
        } while (kind == WitnessKind::rainbow && next_subset(subset, K));
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::indeterminate;
        return res;
    }
    res.status = SearchStatus::none;
    return res;
}

CountResult count_copies(const Blockade& b, const Pattern& p, WitnessKind kind, SearchBudget budget) {
    check_preconditions(b, p, kind);
    const int k = p.g.n();
    const int K = b.length();
    CountResult res;

    std::vector<std::vector<int>> reps;
    if (kind == WitnessKind::ordered_transversal)
        reps.push_back(natural_order(k));
    else
        reps = bijection_coset_reps(p);

    std::vector<int> subset(std::size_t(std::min(k, K)));
    std::iota(subset.begin(), subset.end(), 0);

    try {
        do {
            for (const auto& sigma : reps) {
                std::vector<const Bitset*> blocks;
                for (int bi : subset) blocks.push_back(&b.block_bits[std::size_t(bi)]);
                auto order = size_order(k, sigma, blocks);
                Searcher s(b.g, p, blocks, sigma, order, res.nodes, budget.max_nodes, true);
                s.run(0);
                res.count += s.count;
            }
        } while (kind == WitnessKind::rainbow && next_subset(subset, K));
    } catch (const BudgetExceeded&) {
        res.exact = false;
        res.count = 0;
        return res;
    }
    return res;
}

}  // namespace blkd
