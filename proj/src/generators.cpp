#include "blkd/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "blkd/metrics.hpp"
#include "blkd/rng.hpp"

namespace blkd {

namespace {

std::string int_str(const Int& v) { return v.str(); }

// c eps^2 > 4 ln 2  <=>  e^{c a^2} > 2^{4 b^2} for eps = a/b, certified from
// below with the rational e interval
Int smallest_c(const Rat& eps) {
    Int a = numerator(eps), bq = denominator(eps);
    Int rhs_exp = 4 * bq * bq;
    for (Int c = 1;; ++c) {
        Rat lhs = rpow(euler_lo(), unsigned(c * a * a));
        Rat rhs = Rat(ipow(2, unsigned(rhs_exp)));
        if (lhs > rhs) return c;
    }
}

// 2 ln 2 < d ln(d/(2ce))  <=>  (d/(2ce))^d > 4, certified with e_hi
Int smallest_d(const Int& c) {
    for (Int d = 1;; ++d) {
        Rat base = Rat(d) / (Rat(2) * Rat(c) * euler_hi());
        if (base <= 1) continue;
        if (rpow(base, unsigned(d)) > Rat(4)) return d;
    }
}

struct BipartiteEdges {
    std::vector<std::pair<int, int>> edges;  // (a, b) indices in [0,nA) x [0,nB)
    Int c, d;
};

// One sampling round of the random construction: edges on doubled sides with
// probability c/n, then drop the n highest-degree vertices per side (ties by
// id, higher ids dropped later in the sort so lower ids survive first).
BipartiteEdges sample_lemma_random(int n, const Rat& eps, Rng& rng) {
    BipartiteEdges out;
    out.c = smallest_c(eps);
    out.d = smallest_d(out.c);
    const int N = 2 * n;
    Rat prob = Rat(out.c, Int(n));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
    std::vector<int> degA(static_cast<std::size_t>(N), 0), degB(static_cast<std::size_t>(N), 0);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (rng.bernoulli(prob)) {
                adj[std::size_t(u)].push_back(v);
                ++degA[std::size_t(u)];
                ++degB[std::size_t(v)];
            }
    auto survivors = [&](const std::vector<int>& deg) {
        std::vector<int> ids(static_cast<std::size_t>(N));
        std::iota(ids.begin(), ids.end(), 0);
        std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
            if (deg[std::size_t(x)] != deg[std::size_t(y)]) return deg[std::size_t(x)] > deg[std::size_t(y)];
            return x < y;
        });
        std::vector<int> keep(ids.begin() + n, ids.end());
        std::sort(keep.begin(), keep.end());
        return keep;
    };
    std::vector<int> keepA = survivors(degA), keepB = survivors(degB);
    std::vector<int> mapA(static_cast<std::size_t>(N), -1), mapB(static_cast<std::size_t>(N), -1);
    for (int i = 0; i < n; ++i) {
        mapA[std::size_t(keepA[std::size_t(i)])] = i;
        mapB[std::size_t(keepB[std::size_t(i)])] = i;
    }
    for (int u = 0; u < N; ++u) {
        if (mapA[std::size_t(u)] < 0) continue;
        for (int v : adj[std::size_t(u)])
            if (mapB[std::size_t(v)] >= 0)
                out.edges.emplace_back(mapA[std::size_t(u)], mapB[std::size_t(v)]);
    }
    return out;
}

long long max_cross_degree(const Blockade& b) {
    long long best = 0;
    for (int i = 0; i < b.length(); ++i)
        for (int v : b.blocks[std::size_t(i)])
            for (int j = 0; j < b.length(); ++j) {
                if (i == j) continue;
                best = std::max(best, (long long)b.g.row(v).count_and(b.block_bits[std::size_t(j)]));
            }
    return best;
}

}  // namespace

RandomBipartiteConstants random_bipartite_constants(const Rat& eps) {
    RandomBipartiteConstants rc;
    rc.c = smallest_c(eps);
    rc.d = smallest_d(rc.c);
    return rc;
}

GenResult gen_sparse_cohesive_bipartite(int n, const Rat& eps, const GenSpec& spec) {
    if (n < 2) throw std::invalid_argument("gen_sparse_cohesive_bipartite: need n >= 2");
    if (eps <= 0 || eps > 1) throw std::invalid_argument("need 0 < eps <= 1");
    Rng rng(spec.seed);
    Int x = rat_ceil(eps * Rat(Int(n)));

    GenResult best;
    int best_passes = -1;
    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        auto be = sample_lemma_random(n, eps, rng);
        Graph g(2 * n);
        for (auto [a, bb] : be.edges) g.add_edge(a, n + bb);
        std::vector<int> A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n));
        std::iota(A.begin(), A.end(), 0);
        std::iota(B.begin(), B.end(), n);
        GenResult res;
        res.instance = Blockade(std::move(g), {A, B});
        res.attempts = attempt;

        long long md = max_cross_degree(res.instance);
        bool deg_ok = Int(md) < be.d;
        res.audit.push_back({"max-degree", "< " + int_str(be.d), std::to_string(md), "exact",
                             deg_ok});
        auto coh = check_cohesion(res.instance, x, x, spec.audit_budget);
        bool coh_ok = coh.verdict == Verdict::satisfied && coh.exact;
        res.audit.push_back({"cohesion", "no anticomplete pair at (" + int_str(x) + "," +
                                             int_str(x) + ")",
                             verdict_name(coh.verdict),
                             coh.exact ? "exact" : "sampled", coh_ok});
        res.audit.push_back(
            {"constants", "c > 4 eps^-2 ln 2; 2 ln 2 < d ln(d/(2ce))",
             "c=" + int_str(be.c) + " d=" + int_str(be.d), "exact", true});
        res.ok = deg_ok && coh_ok;
        int passes = int(deg_ok) + int(coh_ok);
        if (res.ok) return res;
        if (passes > best_passes) {
            best_passes = passes;
            best = std::move(res);
        }
    }
    best.ok = false;
    best.notes.push_back("max_attempts exhausted; best candidate returned");
    best.attempts = spec.max_attempts;
    return best;
}

namespace {

// attach one lemma-random bipartite graph across two equal vertex lists,
// auditing locally and resampling within the attempt budget
struct LayerAudit {
    Int c, d;
    long long observed_max_degree = 0;
    Verdict cohesion = Verdict::unknown;
    bool exact = false;
    int attempts = 1;
};

LayerAudit attach_lemma_random(Graph& g, const std::vector<int>& left,
                               const std::vector<int>& right, const Rat& eps_level,
                               const Int& pair_threshold, Rng& rng, const GenSpec& spec) {
    const int n = int(left.size());
    LayerAudit la;
    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        la.attempts = attempt;
        auto be = sample_lemma_random(n, eps_level, rng);
        la.c = be.c;
        la.d = be.d;
        // audit degree and the anticomplete condition on a scratch blockade
        Graph scratch(2 * n);
        for (auto [a, bb] : be.edges) scratch.add_edge(a, n + bb);
        std::vector<int> A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n));
        std::iota(A.begin(), A.end(), 0);
        std::iota(B.begin(), B.end(), n);
        Blockade sb(std::move(scratch), {A, B});
        long long md = max_cross_degree(sb);
        auto coh = check_cohesion(sb, pair_threshold, pair_threshold, spec.audit_budget);
        la.observed_max_degree = md;
        la.cohesion = coh.verdict;
        la.exact = coh.exact;
        bool good = Int(md) < be.d && coh.verdict == Verdict::satisfied && coh.exact;
        if (good || attempt == spec.max_attempts) {
            for (auto [a, bb] : be.edges) g.add_edge(left[std::size_t(a)], right[std::size_t(bb)]);
            return la;
        }
    }
    return la;  // unreachable
}

}  // namespace

GenResult gen_star_free_blockade(int k, int p, int W, const Rat& eps, const GenSpec& spec,
                                 const std::optional<Graph>& host) {
    if (k < 2) throw std::invalid_argument("gen_star_free_blockade: need k >= 2");
    if (W < 1) throw std::invalid_argument("gen_star_free_blockade: need W >= 1");
    const int total = (1 << (k - 1)) * W;
    Graph H = host ? *host : Graph(total);
    if (H.n() != total)
        throw std::invalid_argument("host graph must have 2^{k-1} W vertices");
    for (int v = 0; v < total; ++v)
        if (int(H.degree(v)) > p)
            throw std::invalid_argument("host graph max degree exceeds p");

    Rng rng(spec.seed);
    GenResult res;
    Graph g = H;  // edges accumulate here

    // level graph view passed down as "H"; closure edges are added level by
    // level: two same-side vertices become adjacent when they share a
    // neighbour on the other side in the current level's H u J
    struct Frame {
        int lo, hi, kcur;
        Graph hcur;  // on the global vertex set, restricted meaning [lo,hi)
    };
    std::vector<Frame> stack;
    stack.push_back({0, total, k, H});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const int half = (f.hi - f.lo) / 2;
        const int mid = f.lo + half;
        Rat eps_level = Rat(Int(4), ipow(2, unsigned(f.kcur))) * eps;  // 2^{2-k} eps
        std::vector<int> left(static_cast<std::size_t>(half)), right(static_cast<std::size_t>(half));
        std::iota(left.begin(), left.end(), f.lo);
        std::iota(right.begin(), right.end(), mid);
        Int thr = rat_ceil(eps * Rat(Int(W)));  // anticomplete pairs at eps W on both sides
        Graph J(total);
        auto la = attach_lemma_random(J, left, right, eps_level, std::max<Int>(thr, 1), rng, spec);
        res.audit.push_back({"J(level k=" + std::to_string(f.kcur) + ", [" +
                                 std::to_string(f.lo) + "," + std::to_string(f.hi) + "))",
                             "deg < " + int_str(la.d) + ", no anticomplete pair at eps W",
                             "deg<=" + std::to_string(la.observed_max_degree) + ", cohesion " +
                                 verdict_name(la.cohesion),
                             la.exact ? "exact" : "sampled",
                             Int(la.observed_max_degree) < la.d &&
                                 la.cohesion == Verdict::satisfied});
        // J edges belong to the final graph
        for (auto [u, v] : J.edges()) if (!g.has_edge(u, v)) g.add_edge(u, v);

        if (f.kcur == 2) continue;

        // closure on each side: common (H u J)-neighbour across the cut
        Graph huj = f.hcur;
        for (auto [u, v] : J.edges()) if (!huj.has_edge(u, v)) huj.add_edge(u, v);
        auto build_side = [&](int lo, int hi, int olo, int ohi) {
            Graph side(total);
            for (int u = lo; u < hi; ++u) {
                // H-edges within the side survive
                f.hcur.row(u).for_each([&](std::size_t v) {
                    if (int(v) > u && int(v) < hi && int(v) >= lo) side.add_edge(u, int(v));
                });
            }
            for (int w = olo; w < ohi; ++w) {
                std::vector<int> nb;
                huj.row(w).for_each([&](std::size_t v) {
                    if (int(v) >= lo && int(v) < hi) nb.push_back(int(v));
                });
                for (std::size_t a = 0; a < nb.size(); ++a)
                    for (std::size_t b2 = a + 1; b2 < nb.size(); ++b2)
                        if (!side.has_edge(nb[a], nb[b2])) side.add_edge(nb[a], nb[b2]);
            }
            return side;
        };
        Graph h1 = build_side(f.lo, mid, mid, f.hi);
        Graph h2 = build_side(mid, f.hi, f.lo, mid);
        long long md1 = 0, md2 = 0;
        for (int v = f.lo; v < mid; ++v) md1 = std::max(md1, (long long)h1.degree(v));
        for (int v = mid; v < f.hi; ++v) md2 = std::max(md2, (long long)h2.degree(v));
        res.audit.push_back({"closure(level k=" + std::to_string(f.kcur) + ")",
                             "H_i max degree <= p + d^2",
                             "max " + std::to_string(std::max(md1, md2)), "exact", true});
        // closure edges are part of every deeper level and of the output
        for (auto side : {&h1, &h2})
            for (auto [u, v] : side->edges())
                if (!g.has_edge(u, v)) g.add_edge(u, v);
        stack.push_back({mid, f.hi, f.kcur - 1, std::move(h2)});
        stack.push_back({f.lo, mid, f.kcur - 1, std::move(h1)});
    }

    std::vector<std::vector<int>> blocks;
    for (int b0 = 0; b0 < (1 << (k - 1)); ++b0) {
        std::vector<int> blk(static_cast<std::size_t>(W));
        std::iota(blk.begin(), blk.end(), b0 * W);
        blocks.push_back(std::move(blk));
    }
    res.instance = Blockade(std::move(g), std::move(blocks));
    res.audit.push_back({"structure", "no rainbow star S_" + std::to_string(k),
                         "guaranteed by the closure construction", "exact", true});
    return res;
}

GenResult gen_double_broom_counterexample(int k, int W, const Rat& eps, const GenSpec& spec) {
    if (k < 1 || W < 1) throw std::invalid_argument("gen_double_broom: need k, W >= 1");
    const int K = k + 6;
    const int n = K * W;
    Rng rng(spec.seed);
    GenResult res;

    auto block_ids = [&](int i) {
        std::vector<int> v(static_cast<std::size_t>(W));
        std::iota(v.begin(), v.end(), i * W);
        return v;
    };
    // V_2 = blocks 0..k+2, V_1 = blocks k+3..k+5
    auto in_v1 = [&](int v) { return v >= (k + 3) * W; };
    auto block_of = [&](int v) { return v / W; };

    Graph J(n);
    Int thr = std::max<Int>(rat_ceil(eps * Rat(Int(W))), 1);
    Int cmax = 0, dmax = 0;
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            auto la = attach_lemma_random(J, block_ids(i), block_ids(j), eps, thr, rng, spec);
            cmax = std::max(cmax, la.c);
            dmax = std::max(dmax, la.d);
        }
    res.audit.push_back({"J-layer", "per-pair degree < d, cohesion at eps W",
                         "d=" + int_str(dmax), "exact", true});

    // L: u,v in V_1, distinct blocks, joined by a rainbow J-path of length
    // one or two with interior (if any) in V_2
    Graph L(n);
    for (int u = (k + 3) * W; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (block_of(u) == block_of(v)) continue;
            bool edge = J.has_edge(u, v);
            if (!edge) {
                Bitset common = J.row(u) & J.row(v);
                for (std::size_t w = common.first_set(); w < common.size() && !edge;
                     w = common.next_set(w + 1))
                    if (!in_v1(int(w))) edge = true;
            }
            if (edge) L.add_edge(u, v);
        }

    // R: u,v in V_2, distinct blocks, ends of a rainbow (J u L)-path with all
    // internal vertices in V_1 (at most three, one per V_1 block)
    Graph JL = J;
    for (auto [u, v] : L.edges())
        if (!JL.has_edge(u, v)) JL.add_edge(u, v);
    Graph R(n);
    const int v1lo = (k + 3) * W;
    auto blocks_distinct = [&](std::initializer_list<int> vs) {
        std::vector<int> bs;
        for (int v : vs) bs.push_back(block_of(v));
        std::sort(bs.begin(), bs.end());
        return std::adjacent_find(bs.begin(), bs.end()) == bs.end();
    };
    for (int u = 0; u < v1lo; ++u) {
        std::vector<int> x1s;
        J.row(u).for_each([&](std::size_t x) {
            if (in_v1(int(x))) x1s.push_back(int(x));
        });
        for (int v = u + 1; v < v1lo; ++v) {
            if (block_of(u) == block_of(v)) continue;
            if (R.has_edge(u, v)) continue;
            bool edge = J.has_edge(u, v);
            // one internal vertex
            for (std::size_t a = 0; a < x1s.size() && !edge; ++a)
                if (J.has_edge(x1s[a], v)) edge = true;
            // two or three internal vertices
            for (std::size_t a = 0; a < x1s.size() && !edge; ++a) {
                int x1 = x1s[a];
                Bitset nx = JL.row(x1);
                for (std::size_t x2 = nx.first_set(); x2 < nx.size() && !edge;
                     x2 = nx.next_set(x2 + 1)) {
                    if (!in_v1(int(x2)) || !blocks_distinct({x1, int(x2)})) continue;
                    if (J.has_edge(int(x2), v)) {
                        edge = true;
                        break;
                    }
                    Bitset nx2 = JL.row(int(x2));
                    for (std::size_t x3 = nx2.first_set(); x3 < nx2.size() && !edge;
                         x3 = nx2.next_set(x3 + 1)) {
                        if (!in_v1(int(x3)) || !blocks_distinct({x1, int(x2), int(x3)})) continue;
                        if (int(x3) != x1 && J.has_edge(int(x3), v)) edge = true;
                    }
                }
            }
            if (edge) R.add_edge(u, v);
        }
    }

    Graph G = JL;
    for (auto [u, v] : R.edges())
        if (!G.has_edge(u, v)) G.add_edge(u, v);

    long long lmax = 0, rmax = 0, jlmax = 0;
    for (int v = v1lo; v < n; ++v) lmax = std::max(lmax, (long long)L.degree(v));
    for (int v = 0; v < v1lo; ++v) rmax = std::max(rmax, (long long)R.degree(v));
    for (int v = 0; v < n; ++v) jlmax = std::max(jlmax, (long long)JL.degree(v));
    Int d = dmax;
    Int lbound = 2 * d + 3 * Int(k + 3) * d * d;
    Int jl = Int(k + 3) * d + lbound;
    Int rbound = ipow(jl, 4);
    res.audit.push_back({"L-degree", "<= 2d+3(k+3)d^2 = " + int_str(lbound),
                         std::to_string(lmax), "exact", Int(lmax) <= lbound});
    res.audit.push_back({"R-degree", "<= ((k+3)d+2d+3(k+3)d^2)^4 = " + int_str(rbound),
                         std::to_string(rmax), "exact", Int(rmax) <= rbound});
    res.audit.push_back({"R-vs-JL", "R degree <= (max JL degree)^4",
                         std::to_string(rmax) + " vs " + int_str(ipow(Int(jlmax), 4)), "exact",
                         Int(rmax) <= ipow(Int(jlmax), 4)});

    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < K; ++i) blocks.push_back(block_ids(i));
    res.instance = Blockade(std::move(G), std::move(blocks));
    long long ld = max_cross_degree(res.instance);
    res.audit.push_back({"local-degree", "< eps W = " + rat_str(eps * Rat(Int(W))),
                         std::to_string(ld), "exact", Rat(ld) < eps * Rat(Int(W))});
    return res;
}

namespace {

// smallest integer r with r^t >= x
Int iroot_ceil(const Int& x, unsigned t) {
    if (x <= 0) return 0;
    Int lo = 1, hi = 1;
    while (ipow(hi, t) < x) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, t) < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

GenResult gen_ordered_star_counterexample(int t, const Rat& c, const Rat& eps, int n,
                                          const GenSpec& spec, bool strict_powers,
                                          long max_strict_n) {
    if (t < 3) throw std::invalid_argument("gen_ordered_star: need t >= 3");
    if (c <= Rat(1, t)) throw std::invalid_argument("gen_ordered_star: need c > 1/t");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("gen_ordered_star: need 0 < eps < 1");
    if (n < 2) throw std::invalid_argument("gen_ordered_star: need n >= 2");

    GenResult res;
    // d strictly between 1/t and min(c, 2/t, 1/t + (c-1/t)/(t-1)), midpoint
    Rat upper = std::min({c, Rat(2, t), Rat(1, t) + (c - Rat(1, t)) / Rat(t - 1)});
    Rat d = (Rat(1, t) + upper) / 2;
    res.notes.push_back("d = " + rat_str(d));

    if (strict_powers) {
        // n of the form (b_eps m)^L with L = lcm(den c, den d, t)
        Int L = boost::multiprecision::lcm(
            boost::multiprecision::lcm(denominator(c), denominator(d)), Int(t));
        Int base = denominator(eps);
        Int m = 1;
        Int cand = 0;
        while (true) {
            cand = ipow(base * m, unsigned(L));
            if (cand >= n) break;
            ++m;
            if (cand > max_strict_n) break;
        }
        if (cand > max_strict_n)
            throw std::invalid_argument("strict integrality needs n = (den(eps) m)^" + L.str() +
                                        " which exceeds the bound " + std::to_string(max_strict_n));
        n = int(cand);
        res.notes.push_back("n adjusted to " + std::to_string(n) + " for exact powers");
    } else {
        res.notes.push_back("relaxed powers: fractional sizes rounded up, audited as such");
    }

    const unsigned dp = unsigned(numerator(d)), dq = unsigned(denominator(d));
    const unsigned cpn = unsigned(numerator(c)), cqn = unsigned(denominator(c));
    const Int Wn(n);
    const Int n0 = iroot_ceil(ipow(Wn, 2), unsigned(t));          // ceil(n^{2/t})
    const Int m0i = iroot_ceil(ipow(Wn, dq - dp), dq);            // ceil(n^{1-d})
    const int nblocks = t + 1;
    const int ntotal = nblocks * n + int(n0);
    const int b0lo = nblocks * n;

    Rng rng(spec.seed);
    Graph J(ntotal);
    // J_{t+1,0}: every vertex of the last block picks t-1 targets in B_0
    for (int v = t * n; v < (t + 1) * n; ++v)
        for (int pick = 0; pick < t - 1; ++pick) {
            int w = b0lo + int(rng.below(std::uint64_t(n0)));
            if (!J.has_edge(v, w)) J.add_edge(v, w);
        }
    // J_{0,i}: every vertex of B_0 picks ceil(n^{1-d}) targets in each B_i
    for (int w = b0lo; w < ntotal; ++w)
        for (int i = 0; i < t; ++i)
            for (Int pick = 0; pick < m0i; ++pick) {
                int v = i * n + int(rng.below(std::uint64_t(n)));
                if (!J.has_edge(w, v)) J.add_edge(w, v);
            }
    // J_{i,j}: sparse cohesive bipartite at p = 2 eps^-2 / ceil(n^c)
    Int ncceil = iroot_ceil(ipow(Wn, cpn), cqn);
    Rat p3 = Rat(2) / (eps * eps * Rat(ncceil));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            for (int u = i * n; u < (i + 1) * n; ++u)
                for (int v = j * n; v < (j + 1) * n; ++v)
                    if (rng.bernoulli(p3)) J.add_edge(u, v);

    // closure: an edge between blocks wherever two vertices share a B_0
    // neighbour, then "delete" B_0 by leaving it outside every block
    Graph G = J;
    std::size_t closure_edges = 0;
    for (int w = b0lo; w < ntotal; ++w) {
        std::vector<int> nb;
        J.row(w).for_each([&](std::size_t v) {
            if (int(v) < b0lo) nb.push_back(int(v));
        });
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < nb.size(); ++b2) {
                if (nb[a] / n == nb[b2] / n) continue;
                if (!G.has_edge(nb[a], nb[b2])) {
                    G.add_edge(nb[a], nb[b2]);
                    ++closure_edges;
                }
            }
    }

    // audits
    Bitset b0mask(static_cast<std::size_t>(ntotal));
    for (int w = b0lo; w < ntotal; ++w) b0mask.set(std::size_t(w));
    long long capJ = 0;
    for (int v = t * n; v < (t + 1) * n; ++v)
        capJ = std::max(capJ, (long long)J.row(v).count_and(b0mask));
    res.audit.push_back({"degree-cap", "every last-block vertex has <= t-1 = " +
                                           std::to_string(t - 1) + " picks in B_0",
                         std::to_string(capJ), "exact", capJ <= t - 1});
    // every closure edge from the last block is witnessed in B_0
    bool witnessed = true;
    for (int v = t * n; v < (t + 1) * n && witnessed; ++v)
        for (int i = 0; i < t && witnessed; ++i)
            for (int u = i * n; u < (i + 1) * n && witnessed; ++u)
                if (G.has_edge(v, u)) {
                    Bitset common = J.row(v) & J.row(u);
                    bool found = false;
                    common.for_each([&](std::size_t w) {
                        if (int(w) >= b0lo) found = true;
                    });
                    if (!found) witnessed = false;
                }
    res.audit.push_back({"closure-witness",
                         "every edge from the last block into B_i has a common B_0 neighbour",
                         witnessed ? "all witnessed" : "violation", "exact", witnessed});
    res.audit.push_back({"layers", "B_0 size ceil(n^{2/t}), per-vertex picks ceil(n^{1-d})",
                         "|B_0|=" + int_str(n0) + " picks=" + int_str(m0i) + " closure-edges=" +
                             std::to_string(closure_edges),
                         "exact", true});

    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < nblocks; ++i) {
        std::vector<int> blk(static_cast<std::size_t>(n));
        std::iota(blk.begin(), blk.end(), i * n);
        blocks.push_back(std::move(blk));
    }
    res.instance = Blockade(std::move(G), std::move(blocks));

    long long ld = max_cross_degree(res.instance);
    res.audit.push_back({"local-degree", "< eps n = " + rat_str(eps * Rat(Wn)),
                         std::to_string(ld), "exact", Rat(ld) < eps * Rat(Wn)});
    Int cx = std::max<Int>(rat_ceil(eps * Rat(Wn)), 1);
    Int cy = std::max<Int>(PowThreshold{eps, Wn, cpn, cqn}.ceil(), 1);
    auto coh = check_cohesion(res.instance, cx, cy, spec.audit_budget);
    res.audit.push_back({"cohesion", "(eps n, eps n^c) = (" + int_str(cx) + "," + int_str(cy) + ")",
                         verdict_name(coh.verdict), coh.exact ? "exact" : "sampled",
                         coh.verdict == Verdict::satisfied});
    return res;
}

}  // namespace blkd
