#include <algorithm>

#include "blkd/finders.hpp"

namespace blkd {

namespace {

bool is_tree(const Graph& g) {
    const int k = g.n();
    if (k == 0) return false;
    if (int(g.edge_count()) != k - 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.row(v).for_each([&](std::size_t u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(int(u));
            }
        });
    }
    return cnt == k;
}

// degree within an induced subset
int deg_in(const Graph& g, int v, const Bitset& alive) {
    return int(g.row(v).count_and(alive));
}

bool is_caterpillar(const Graph& g) {
    if (!is_tree(g)) return false;
    const int k = g.n();
    std::vector<int> spine;
    for (int v = 0; v < k; ++v)
        if (g.degree(v) >= 2) spine.push_back(v);
    if (spine.size() <= 1) return true;
    Bitset sm = Bitset::from_vector(std::size_t(k), spine);
    int edges = 0;
    for (int v : spine) {
        int d = deg_in(g, v, sm);
        if (d > 2) return false;
        edges += d;
    }
    return edges / 2 == int(spine.size()) - 1;
}

// v is an end of some path containing every vertex of degree > 1
bool is_head(const Graph& g, int v) {
    const int k = g.n();
    std::vector<int> spine;
    for (int u = 0; u < k; ++u)
        if (g.degree(u) >= 2) spine.push_back(u);
    if (spine.empty()) return true;
    Bitset sm = Bitset::from_vector(std::size_t(k), spine);
    std::vector<int> ends;
    for (int u : spine)
        if (deg_in(g, u, sm) <= 1) ends.push_back(u);
    for (int e : ends) {
        if (v == e) return true;
        if (g.degree(v) == 1 && g.has_edge(v, e)) return true;
    }
    return false;
}

// the (4 count)^d W >= |C|^d test: count >= (|C|/4) W^{-1/d}
bool attach_floor_ok(std::size_t count, std::size_t csize, const Int& W, int d) {
    return ipow(Int(4) * Int(count), unsigned(d)) * W >= ipow(Int(csize), unsigned(d));
}

struct CatEmbedder {
    const Graph& g;
    int d;
    FinderOutcome& out;
    int depth = 0;

    // cur: pattern vertices in current order; full: host sets per position
    // (position 0's full block is not stripped; the image there comes from C)
    std::optional<std::vector<std::pair<int, int>>> run(std::vector<int> cur,
                                                        std::vector<Bitset> full, Bitset C,
                                                        const Graph& pg) {
        ++depth;
        const int kc = int(cur.size());
        std::string tag = "(" + std::to_string(depth) + ")";
        if (kc == 1) {
            if (C.none()) {
                out.stage("base" + tag, "C nonempty", "empty", false);
                return std::nullopt;
            }
            return std::vector<std::pair<int, int>>{{cur[0], int(C.first_set())}};
        }
        if (kc == 2) {
            for (std::size_t u = C.first_set(); u < C.size(); u = C.next_set(u + 1)) {
                Bitset cand = full[1] & g.row(int(u));
                if (cand.any())
                    return std::vector<std::pair<int, int>>{{cur[0], int(u)},
                                                            {cur[1], int(cand.first_set())}};
            }
            out.stage("base-edge" + tag, "edge between C and the last block", "none", false);
            return std::nullopt;
        }

        Bitset alive = Bitset::from_vector(std::size_t(pg.n()), cur);
        const int head = cur[0];
        const int d1 = deg_in(pg, head, alive);
        Int Wcur(full[0].count());
        for (const auto& s : full) Wcur = std::min(Wcur, Int(s.count()));

        if (d1 >= 2) {
            // highest-position degree-one neighbour of the head
            int jpos = -1;
            for (int i = kc - 1; i >= 1 && jpos < 0; --i)
                if (pg.has_edge(head, cur[std::size_t(i)]) &&
                    deg_in(pg, cur[std::size_t(i)], alive) == 1)
                    jpos = i;
            if (jpos < 0) throw std::logic_error("caterpillar head lost its leaf neighbour");
            // u_j maximizing neighbours in C
            int uj = -1;
            std::size_t best = 0;
            full[std::size_t(jpos)].for_each([&](std::size_t v) {
                std::size_t cnt = g.row(int(v)).count_and(C);
                if (int(v) >= 0 && (uj < 0 || cnt > best)) {
                    uj = int(v);
                    best = cnt;
                }
            });
            bool floor_ok = uj >= 0 && attach_floor_ok(best, C.count(), Wcur, d);
            out.stage("leaf-attach" + tag, ">= |C| W^(-1/" + std::to_string(d) + ")/4",
                      uj >= 0 ? std::to_string(best) + " at u=" + std::to_string(uj) : "no host",
                      floor_ok);
            if (uj < 0 || best == 0) return std::nullopt;
            Bitset C2 = C & g.row(uj);
            std::vector<int> cur2;
            std::vector<Bitset> full2;
            for (int i = 0; i < kc; ++i) {
                if (i == jpos) continue;
                cur2.push_back(cur[std::size_t(i)]);
                Bitset f = full[std::size_t(i)];
                if (i != 0) f.and_not(g.row(uj));
                full2.push_back(std::move(f));
            }
            auto rec = run(std::move(cur2), std::move(full2), std::move(C2), pg);
            if (!rec) return std::nullopt;
            rec->emplace_back(cur[std::size_t(jpos)], uj);
            return rec;
        }

        // d1 == 1: head's unique neighbour is position 1 (validated)
        PowThreshold thr{Rat(1, 2), Wcur, unsigned(d - 1), unsigned(d)};
        int u0 = -1;
        std::size_t got = 0;
        for (std::size_t u = C.first_set(); u < C.size(); u = C.next_set(u + 1)) {
            std::size_t cnt = g.row(int(u)).count_and(full[1]);
            if (thr.at_least(Int(cnt))) {
                u0 = int(u);
                got = cnt;
                break;
            }
        }
        out.stage("head-step" + tag, ">= " + thr.str(),
                  u0 >= 0 ? std::to_string(got) + " at u=" + std::to_string(u0) : "none", u0 >= 0);
        if (u0 < 0) return std::nullopt;
        Bitset C2 = full[1] & g.row(u0);
        std::vector<int> cur2(cur.begin() + 1, cur.end());
        std::vector<Bitset> full2(full.begin() + 1, full.end());
        for (std::size_t i = 1; i < full2.size(); ++i) full2[i].and_not(g.row(u0));
        auto rec = run(std::move(cur2), std::move(full2), std::move(C2), pg);
        if (!rec) return std::nullopt;
        rec->emplace_back(cur[0], u0);
        return rec;
    }
};

// simulate the peel on the pattern alone; throws when the ordering cannot
// drive the recursion (head must stay first; a degree-one head must be
// attached to position 1)
void validate_caterpillar_ordering(const Pattern& p, int d) {
    const int k = p.g.n();
    if (!is_tree(p.g)) throw std::invalid_argument("pattern is not a tree");
    if (!is_caterpillar(p.g)) throw std::invalid_argument("pattern is not a caterpillar");
    for (int v = 0; v < k; ++v)
        if (int(p.g.degree(v)) > d)
            throw std::invalid_argument("pattern max degree exceeds d");
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[std::size_t(i)] = i;
    while (cur.size() >= 2) {
        Bitset alive = Bitset::from_vector(std::size_t(k), cur);
        // induced head check on the remaining pattern
        {
            std::vector<int> spine;
            for (int v : cur)
                if (deg_in(p.g, v, alive) >= 2) spine.push_back(v);
            if (!spine.empty()) {
                Bitset sm = Bitset::from_vector(std::size_t(k), spine);
                bool head_ok = false;
                for (int e : spine) {
                    if (deg_in(p.g, e, sm) > 1) continue;
                    if (cur[0] == e || (deg_in(p.g, cur[0], alive) == 1 && p.g.has_edge(cur[0], e)))
                        head_ok = true;
                }
                if (!head_ok)
                    throw std::invalid_argument("ordering does not keep vertex 1 a head");
            }
        }
        if (cur.size() == 2) break;
        int d1 = deg_in(p.g, cur[0], alive);
        if (d1 >= 2) {
            int jpos = -1;
            for (int i = int(cur.size()) - 1; i >= 1 && jpos < 0; --i)
                if (p.g.has_edge(cur[0], cur[std::size_t(i)]) &&
                    deg_in(p.g, cur[std::size_t(i)], alive) == 1)
                    jpos = i;
            if (jpos < 0) throw std::invalid_argument("head has no removable leaf neighbour");
            cur.erase(cur.begin() + jpos);
        } else {
            if (!p.g.has_edge(cur[0], cur[1]))
                throw std::invalid_argument(
                    "ordering not embeddable: a degree-one head must be attached to position 2");
            cur.erase(cur.begin());
        }
    }
}

}  // namespace

FinderOutcome find_ordered_caterpillar(const Blockade& b, const Pattern& p, int head,
                                       const std::vector<int>& C1, std::optional<Rat> eps_in,
                                       int d) {
    require_valid(b);
    const int k = p.g.n();
    if (k != b.length())
        throw std::invalid_argument("find_ordered_caterpillar: pattern size != blockade length");
    if (head != 0) throw std::invalid_argument("find_ordered_caterpillar: the head is vertex 0");
    if (d < 1) throw std::invalid_argument("find_ordered_caterpillar: need d >= 1");
    validate_caterpillar_ordering(p, d);
    if (!is_head(p.g, 0)) throw std::invalid_argument("vertex 0 is not a head of the caterpillar");

    auto card = regime_card("caterpillar", {.k = k, .d = d});
    const Rat eps = eps_in.value_or(card.eps);
    (void)eps;  // premises are never hard preconditions; eps shows in the trace only
    const Int W(b.width());
    const std::size_t n = std::size_t(b.g.n());
    FinderOutcome out;

    Bitset C = C1.empty() ? b.block_bits[0] : Bitset(n);
    for (int v : C1) {
        if (!b.block_bits[0].test(std::size_t(v)))
            throw std::invalid_argument("C1 must be a subset of block 0");
        C.set(std::size_t(v));
    }
    const int d1 = int(p.g.degree(0));
    // entry floor 4^{d1-d} W^{d1/d}, recorded but waivable
    {
        Rat coeff(1, ipow(4, unsigned(d - d1)));
        PowThreshold floor{coeff, W, unsigned(d1), unsigned(d)};
        out.stage("C1-floor", ">= " + floor.str(), std::to_string(C.count()),
                  floor.at_least(Int(C.count())));
    }

    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[std::size_t(i)] = i;
    std::vector<Bitset> full = b.block_bits;

    CatEmbedder emb{b.g, d, out};
    auto got = emb.run(std::move(cur), std::move(full), std::move(C), p.g);
    if (!got) {
        out.finalize_failure();
        return out;
    }
    Witness w;
    w.kind = WitnessKind::ordered_transversal;
    w.assignment.assign(std::size_t(k), -1);
    w.blocks_used.assign(std::size_t(k), -1);
    for (auto& [pv, host] : *got) {
        w.assignment[std::size_t(pv)] = host;
        w.blocks_used[std::size_t(pv)] = pv;
    }
    out.finish(b, p, std::move(w));
    return out;
}

// Greedy left-to-right realization of the counting induction: each vertex is
// a leaf of the prefix attached to exactly one earlier vertex, so candidates
// are one row intersection and a stack of row exclusions; backtracking within
// the budget.
FinderOutcome embed_ordered_tree(const Blockade& b, const Pattern& p, std::optional<Rat> c,
                                 std::uint64_t budget) {
    require_valid(b);
    const int k = p.g.n();
    if (k != b.length())
        throw std::invalid_argument("embed_ordered_tree: pattern size != blockade length");
    if (!is_tree(p.g)) throw std::invalid_argument("embed_ordered_tree: pattern is not a tree");
    for (int m = 1; m < k; ++m) {
        Bitset prefix(static_cast<std::size_t>(k));
        for (int i = 0; i <= m; ++i) prefix.set(std::size_t(i));
        if (deg_in(p.g, m, prefix) != 1)
            throw std::invalid_argument(
                "embed_ordered_tree: vertex " + std::to_string(m) +
                " is not a leaf of the prefix; this ordering does not admit the induction");
    }
    FinderOutcome out;
    const Int W(b.width());
    if (c) {
        auto card = regime_card("counttree", {.k = k, .c = c});
        unsigned cp = unsigned(numerator(*c)), cq = unsigned(denominator(*c));
        PowThreshold bound{card.eps, W, unsigned(k) * cq - unsigned(k - 1) * cp, cq};
        out.stage("count-bound", "", "4^(1-k) W^(k-(k-1)c) = " + bound.str(), true);
    }

    std::vector<int> host(static_cast<std::size_t>(k), -1);
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::vector<std::size_t> iter(static_cast<std::size_t>(k), 0);
    // iterative DFS with explicit candidate sets
    std::vector<Bitset> cands(static_cast<std::size_t>(k), Bitset(std::size_t(b.g.n())));
    int depth = 0;
    auto compute = [&](int i) {
        Bitset cand = b.block_bits[std::size_t(i)];
        for (int j = 0; j < i; ++j) {
            if (p.g.has_edge(i, j))
                cand &= b.g.row(host[std::size_t(j)]);
            else
                cand.and_not(b.g.row(host[std::size_t(j)]));
        }
        return cand;
    };
    cands[0] = compute(0);
    iter[0] = cands[0].first_set();
    while (depth >= 0) {
        if (depth == k) break;
        std::size_t v = iter[std::size_t(depth)];
        if (v >= cands[std::size_t(depth)].size()) {
            --depth;
            if (depth >= 0)
                iter[std::size_t(depth)] =
                    cands[std::size_t(depth)].next_set(iter[std::size_t(depth)] + 1);
            continue;
        }
        if (++nodes > budget) {
            exhausted = true;
            break;
        }
        host[std::size_t(depth)] = int(v);
        ++depth;
        if (depth < k) {
            cands[std::size_t(depth)] = compute(depth);
            iter[std::size_t(depth)] = cands[std::size_t(depth)].first_set();
        }
    }
    out.stage("embed", "ordered transversal of the tree",
              exhausted ? "budget exhausted after " + std::to_string(nodes) + " nodes"
                        : (depth == k ? "found (" + std::to_string(nodes) + " nodes)"
                                      : "search space exhausted"),
              depth == k);
    if (depth != k) {
        out.finalize_failure();
        return out;
    }
    Witness w;
    w.kind = WitnessKind::ordered_transversal;
    w.assignment = host;
    w.blocks_used.resize(std::size_t(k));
    for (int i = 0; i < k; ++i) w.blocks_used[std::size_t(i)] = i;
    out.finish(b, p, std::move(w));
    return out;
}

}  // namespace blkd
