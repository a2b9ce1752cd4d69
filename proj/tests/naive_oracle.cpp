#include "naive_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace naive {

using blkd::Blockade;
using blkd::Int;
using blkd::Pattern;

namespace {

std::vector<std::vector<bool>> adjacency_matrix(const blkd::Graph& g) {
    std::vector<std::vector<bool>> m(std::size_t(g.n()), std::vector<bool>(std::size_t(g.n()), false));
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) m[std::size_t(u)][std::size_t(v)] = g.has_edge(u, v);
    return m;
}

// does some permutation map the pattern onto the tuple as an induced copy?
bool iso_exists(const Pattern& p, const std::vector<std::vector<bool>>& host,
                const std::vector<int>& tuple) {
    const int k = p.g.n();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                if (p.g.has_edge(i, j) !=
                    host[std::size_t(tuple[std::size_t(perm[std::size_t(i)])])]
                        [std::size_t(tuple[std::size_t(perm[std::size_t(j)])])])
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool identity_iso(const Pattern& p, const std::vector<std::vector<bool>>& host,
                  const std::vector<int>& tuple) {
    const int k = p.g.n();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p.g.has_edge(i, j) != host[std::size_t(tuple[std::size_t(i)])]
                                          [std::size_t(tuple[std::size_t(j)])])
                return false;
    return true;
}

// full odometer over the chosen blocks
template <class F>
void all_tuples(const Blockade& b, const std::vector<int>& blocks, F&& f) {
    const int k = int(blocks.size());
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    if (k == 0) return;
    while (true) {
        std::vector<int> tuple(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            tuple[std::size_t(i)] = b.blocks[std::size_t(blocks[std::size_t(i)])][std::size_t(idx[std::size_t(i)])];
        f(tuple);
        int pos = k - 1;
        while (pos >= 0) {
            if (++idx[std::size_t(pos)] <
                int(b.blocks[std::size_t(blocks[std::size_t(pos)])].size()))
                break;
            idx[std::size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

}  // namespace

Int count_ordered(const Blockade& b, const Pattern& p) {
    auto host = adjacency_matrix(b.g);
    std::vector<int> blocks(std::size_t(b.length()));
    std::iota(blocks.begin(), blocks.end(), 0);
    Int count = 0;
    all_tuples(b, blocks, [&](const std::vector<int>& tuple) {
        if (identity_iso(p, host, tuple)) ++count;
    });
    return count;
}

Int count_transversal(const Blockade& b, const Pattern& p) {
    auto host = adjacency_matrix(b.g);
    std::vector<int> blocks(std::size_t(b.length()));
    std::iota(blocks.begin(), blocks.end(), 0);
    Int count = 0;
    all_tuples(b, blocks, [&](const std::vector<int>& tuple) {
        if (iso_exists(p, host, tuple)) ++count;
    });
    return count;
}

Int count_rainbow(const Blockade& b, const Pattern& p) {
    const int K = b.length();
    const int k = p.g.n();
    auto host = adjacency_matrix(b.g);
    Int count = 0;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        all_tuples(b, subset, [&](const std::vector<int>& tuple) {
            if (iso_exists(p, host, tuple)) ++count;
        });
        int i = k - 1;
        while (i >= 0 && subset[std::size_t(i)] == K - k + i) --i;
        if (i < 0) break;
        ++subset[std::size_t(i)];
        for (int j2 = i + 1; j2 < k; ++j2) subset[std::size_t(j2)] = subset[std::size_t(j2 - 1)] + 1;
    }
    return count;
}

}  // namespace naive
