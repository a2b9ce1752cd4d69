#include <algorithm>
#include <map>

#include "blkd/finders.hpp"

namespace blkd {

namespace {

struct StarCopy {
    int centre_block = -1;
    int centre_host = -1;
    std::vector<std::pair<int, int>> leaves;  // (block, host), ascending by block
};

// one found rainbow S_{t+1}, mapped back to original block ids
StarCopy decode_star(const Witness& w, const std::vector<int>& fam_blocks,
                     const std::vector<int>& live_idx) {
    StarCopy c;
    c.centre_host = w.assignment[0];
    c.centre_block = fam_blocks[std::size_t(live_idx[std::size_t(w.blocks_used[0])])];
    for (std::size_t i = 1; i < w.assignment.size(); ++i)
        c.leaves.emplace_back(fam_blocks[std::size_t(live_idx[std::size_t(w.blocks_used[i])])],
                              w.assignment[i]);
    std::sort(c.leaves.begin(), c.leaves.end());
    return c;
}

}  // namespace

// The broom pipeline: covering digraph; a high-indegree block turns a path on
// the cores into a broom directly; otherwise extract mutually unrelated
// blocks, grow a maximal family of disjoint rainbow stars there, keep the
// biggest type bucket, carve good sets around its neighbourhood, close with a
// path, and glue one star onto the path end.
FinderOutcome find_transversal_broom(const Blockade& b, int k, int t, std::optional<Rat> tau_in,
                                     std::optional<Rat> eps_in, SearchBudget family_budget) {
    require_valid(b);
    if (k < 1 || t < 1) throw std::invalid_argument("find_transversal_broom: need k, t >= 1");
    const int K = b.length();
    if (K != k + t)
        throw std::invalid_argument("find_transversal_broom: blockade length must be k+t");
    auto card = regime_card("brooms", {.k = k, .t = t});
    const Rat tau = tau_in.value_or(*card.tau);
    const Rat eps = eps_in.value_or(card.eps);
    const std::size_t n = std::size_t(b.g.n());
    FinderOutcome out;

    auto cd = build_covering_digraph(b, tau);
    const unsigned z = unsigned(cd.arcs.size());
    out.stage("covering-digraph", "tau=" + rat_str(tau), "arcs=" + std::to_string(z), true);

    // morecoveringdig premise; recorded, not a gate — the pipeline runs on and
    // an eventual failure reports this as its first unmet premise
    auto od = cd.outdeg();
    int zero_out = -1;
    for (int i = 0; i < K && zero_out < 0; ++i)
        if (od[std::size_t(i)] == 0) zero_out = i;
    out.stage("outdegree", ">= 1 everywhere",
              zero_out < 0 ? "ok" : "block " + std::to_string(zero_out) + " has outdegree 0",
              zero_out < 0);

    auto id = cd.indeg();
    int m = -1;
    for (int i = 0; i < K && m < 0; ++i)
        if (id[std::size_t(i)] >= t) m = i;

    if (m >= 0) {
        // step (1): t cover sets point at block m; path through the rest
        out.stage("indegree-check", "some block with indegree >= " + std::to_string(t),
                  "block " + std::to_string(m), true);
        std::vector<int> S;
        for (const auto& a : cd.arcs)
            if (a.second == m) S.push_back(a.first);
        std::sort(S.begin(), S.end());
        S.resize(std::size_t(t));
        std::vector<int> path_blocks{m};
        for (int i = 0; i < K; ++i)
            if (i != m && std::find(S.begin(), S.end(), i) == S.end()) path_blocks.push_back(i);

        std::vector<Bitset> sub_sets;
        for (int pb : path_blocks) sub_sets.push_back(cd.cores[std::size_t(pb)]);
        Blockade sub = b.restricted(sub_sets);
        auto po = find_transversal_path(sub, Rat(1, ipow(3, unsigned(k))));
        out.merge_trace(po, "step1.path.");
        if (!po.found()) {
            out.finalize_failure();
            return out;
        }
        int p_end = po.witness->assignment[0];

        Witness w;
        w.kind = WitnessKind::transversal;
        w.assignment.assign(std::size_t(k + t), -1);
        w.blocks_used.assign(std::size_t(k + t), -1);
        for (int i = 0; i < k; ++i) {
            // path vertex 0 sits in A_m and becomes the attachment end p_k
            w.assignment[std::size_t(k - 1 - i)] = po.witness->assignment[std::size_t(i)];
            w.blocks_used[std::size_t(k - 1 - i)] =
                path_blocks[std::size_t(po.witness->blocks_used[std::size_t(i)])];
        }
        for (int li = 0; li < t; ++li) {
            int jb = S[std::size_t(li)];
            std::size_t arc_idx = 0;
            while (!(cd.arcs[arc_idx].first == jb && cd.arcs[arc_idx].second == m)) ++arc_idx;
            Bitset cand = cd.covers[arc_idx] & b.g.row(p_end);
            if (cand.none()) {
                out.stage("attach-leaves", "cover vertex adjacent to path end",
                          "none in X(" + std::to_string(jb) + "->" + std::to_string(m) + ")",
                          false);
                out.finalize_failure();
                return out;
            }
            w.assignment[std::size_t(k + li)] = int(cand.first_set());
            w.blocks_used[std::size_t(k + li)] = jb;
        }
        out.finish(b, patterns::broom(k, t), std::move(w));
        return out;
    }
    out.stage("indegree-check", "some block with indegree >= " + std::to_string(t),
              "all below; step (2) branch", true);

    // step (2): blocks pairwise nonadjacent in J sharing no out-neighbour,
    // peeled off by deleting the closed conflict set of a minimum-outdegree
    // vertex. Conflict sets are taken in the original digraph so the final
    // picks carry the property there.
    const int need = (1 << t) + 1;
    std::vector<char> alive(static_cast<std::size_t>(K), 1);
    std::vector<int> picks;
    auto arc_in = [&](int i, int j) { return cd.has_arc(i, j); };
    int alive_cnt = K;
    while (alive_cnt > 0) {
        int best = -1, best_deg = 0;
        for (int i = 0; i < K; ++i) {
            if (!alive[std::size_t(i)]) continue;
            int deg = 0;
            for (int j2 = 0; j2 < K; ++j2)
                if (alive[std::size_t(j2)] && arc_in(i, j2)) ++deg;
            if (best < 0 || deg < best_deg) {
                best = i;
                best_deg = deg;
            }
        }
        picks.push_back(best);
        for (int v = 0; v < K; ++v) {
            if (!alive[std::size_t(v)]) continue;
            bool conflict = v == best || arc_in(best, v) || arc_in(v, best);
            for (int w2 = 0; w2 < K && !conflict; ++w2)
                if (arc_in(v, w2) && arc_in(best, w2)) conflict = true;
            if (conflict) {
                alive[std::size_t(v)] = 0;
                --alive_cnt;
            }
        }
    }
    out.stage("stable-set", ">= " + std::to_string(need) + " blocks",
              std::to_string(picks.size()), int(picks.size()) >= need);
    if (int(picks.size()) < need) {
        out.finalize_failure();
        return out;
    }
    std::vector<int> fam_blocks(picks.begin(), picks.begin() + need);
    std::sort(fam_blocks.begin(), fam_blocks.end());

    // step (3): maximal family of pairwise disjoint rainbow S_{t+1} copies
    Pattern star = patterns::star(t + 1);
    std::vector<Bitset> avail;
    for (int fb : fam_blocks) avail.push_back(cd.cores[std::size_t(fb)]);
    std::vector<StarCopy> family;
    while (true) {
        std::vector<int> live_idx;
        std::vector<Bitset> live_sets;
        for (std::size_t i = 0; i < avail.size(); ++i)
            if (avail[i].any()) {
                live_idx.push_back(int(i));
                live_sets.push_back(avail[i]);
            }
        if (int(live_idx.size()) < t + 2) break;
        Blockade subf = b.restricted(live_sets);
        auto fr = find_copy(subf, star, WitnessKind::rainbow, family_budget);
        if (fr.status == SearchStatus::indeterminate) {
            out.stage("family-budget", "search within budget", "exceeded", false);
            out.finalize_failure();
            return out;
        }
        if (fr.status == SearchStatus::none) break;
        auto copy = decode_star(*fr.witness, fam_blocks, live_idx);
        for (int h : fr.witness->assignment)
            for (auto& av : avail)
                if (av.test(std::size_t(h))) av.reset(std::size_t(h));
        family.push_back(std::move(copy));
    }
    out.stage("star-family", ">= 1 disjoint rainbow S_" + std::to_string(t + 1),
              std::to_string(family.size()), !family.empty());
    if (family.empty()) {
        out.finalize_failure();
        return out;
    }

    // largest type bucket, ties to the lexicographically least type
    std::map<std::pair<int, std::vector<int>>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<int> lb;
        for (auto& lf : family[i].leaves) lb.push_back(lf.first);
        buckets[{family[i].centre_block, lb}].push_back(i);
    }
    auto best_it = buckets.begin();
    for (auto it = buckets.begin(); it != buckets.end(); ++it)
        if (it->second.size() > best_it->second.size()) best_it = it;
    const int ctr_block = best_it->first.first;
    const std::vector<int>& leaf_blocks = best_it->first.second;
    std::vector<StarCopy> bucket;
    for (auto i : best_it->second) bucket.push_back(family[i]);
    std::vector<int> type_blocks{ctr_block};
    type_blocks.insert(type_blocks.end(), leaf_blocks.begin(), leaf_blocks.end());
    std::sort(type_blocks.begin(), type_blocks.end());

    // minimal n with the neighbourhood threshold, lowest (r, s)
    int chosen_n = -1, r_block = -1, s_block = -1;
    {
        Bitset F(n);
        for (std::size_t nn = 0; nn < bucket.size() && chosen_n < 0; ++nn) {
            F.set(std::size_t(bucket[nn].centre_host));
            for (auto& lf : bucket[nn].leaves) F.set(std::size_t(lf.second));
            for (int r : type_blocks) {
                Bitset Fr = F & cd.cores[std::size_t(r)];
                if (Fr.none()) continue;
                Bitset NFr = b.g.neighbours_of_set(Fr);
                for (int s = 0; s < K; ++s) {
                    if (s == r) continue;
                    std::size_t cnt = NFr.count_and(cd.cores[std::size_t(s)]);
                    if (std::size_t(2 * t + 2) * cnt >= cd.cores[std::size_t(s)].count()) {
                        chosen_n = int(nn) + 1;
                        r_block = r;
                        s_block = s;
                        break;
                    }
                }
                if (chosen_n > 0) break;
            }
        }
    }
    out.stage("family-coverage", ">= |A_s|/(2t+2) for some r in the type and s != r",
              chosen_n > 0 ? "n=" + std::to_string(chosen_n) + " r=" + std::to_string(r_block) +
                                 " s=" + std::to_string(s_block)
                           : "never reached",
              chosen_n > 0);
    if (chosen_n < 0) {
        out.finalize_failure();
        return out;
    }

    // trim: if r is the centre block, drop the highest leaf block from every
    // copy (S_{t+1} -> S_t); used type blocks shrink accordingly
    const bool r_is_centre = (r_block == ctr_block);
    int drop_block = -1;
    if (r_is_centre) drop_block = *std::max_element(leaf_blocks.begin(), leaf_blocks.end());
    std::vector<int> used_type;
    for (int tb : type_blocks)
        if (tb != drop_block) used_type.push_back(tb);

    std::vector<int> path_blocks;
    for (int i = 0; i < K; ++i)
        if (std::find(used_type.begin(), used_type.end(), i) == used_type.end())
            path_blocks.push_back(i);
    bool s_ok = std::find(path_blocks.begin(), path_blocks.end(), s_block) != path_blocks.end();
    out.stage("s-outside-type", "s lands outside the used type blocks",
              s_ok ? "ok" : "s=" + std::to_string(s_block) + " inside", s_ok);
    if (!s_ok) {
        out.finalize_failure();
        return out;
    }

    Bitset Fprime(n);
    std::vector<StarCopy> trimmed(bucket.begin(), bucket.begin() + chosen_n);
    for (auto& c : trimmed) {
        if (r_is_centre)
            c.leaves.erase(std::remove_if(c.leaves.begin(), c.leaves.end(),
                                          [&](auto& lf) { return lf.first == drop_block; }),
                           c.leaves.end());
        Fprime.set(std::size_t(c.centre_host));
        for (auto& lf : c.leaves) Fprime.set(std::size_t(lf.second));
    }

    // good vertices in A_s: a neighbour inside F' ∩ A_r, none in the rest of F'
    Bitset FrP = Fprime & cd.cores[std::size_t(r_block)];
    Bitset Ffar = Fprime;
    Ffar.and_not(cd.cores[std::size_t(r_block)]);
    Bitset nearN = b.g.neighbours_of_set(FrP);
    Bitset farN = b.g.neighbours_of_set(Ffar);
    Bitset Cs = cd.cores[std::size_t(s_block)] & nearN;
    Cs.and_not(farN);
    out.stage("good-set",
              ">= |A_s|/(4t+8) = " +
                  rat_str(Rat(Int(cd.cores[std::size_t(s_block)].count()), Int(4 * t + 8))),
              std::to_string(Cs.count()),
              Rat(Int(Cs.count())) >=
                  Rat(Int(cd.cores[std::size_t(s_block)].count()), Int(4 * t + 8)));
    if (Cs.none()) {
        out.finalize_failure();
        return out;
    }

    Bitset allFN = b.g.neighbours_of_set(Fprime);
    std::vector<int> tail_blocks;  // path blocks minus s, ascending
    std::vector<Bitset> sub_sets{Cs};
    bool empty_cj = false;
    for (int j : path_blocks) {
        if (j == s_block) continue;
        Bitset Cj = cd.cores[std::size_t(j)];
        Cj.and_not(allFN);
        out.stage("clean-block(" + std::to_string(j) + ")",
                  ">= |A_j|/(4t+8) = " +
                      rat_str(Rat(Int(cd.cores[std::size_t(j)].count()), Int(4 * t + 8))),
                  std::to_string(Cj.count()),
                  Rat(Int(Cj.count())) >=
                      Rat(Int(cd.cores[std::size_t(j)].count()), Int(4 * t + 8)));
        if (Cj.none()) empty_cj = true;
        tail_blocks.push_back(j);
        sub_sets.push_back(Cj);
    }
    if (empty_cj || sub_sets.size() < 2) {
        if (sub_sets.size() < 2)
            out.stage("path-blocks", ">= 1 block besides s", std::to_string(sub_sets.size() - 1),
                      false);
        out.finalize_failure();
        return out;
    }

    // step (6): close with a path starting in C_s
    Rat eps6 = Rat(Int(4 * t + 8)) * eps * rpow(Rat(denominator(tau), numerator(tau)), z);
    Blockade sub = b.restricted(sub_sets);
    auto po = find_transversal_path(sub, eps6);
    out.merge_trace(po, "step6.path.");
    if (!po.found()) {
        out.finalize_failure();
        return out;
    }
    const int v_host = po.witness->assignment[0];
    Bitset ucand = FrP & b.g.row(v_host);
    if (ucand.none()) {
        out.stage("glue", "path end sees F' in A_r", "no neighbour", false);
        out.finalize_failure();
        return out;
    }
    const int u_host = int(ucand.first_set());
    const StarCopy* mcopy = nullptr;
    for (const auto& c : trimmed) {
        if (c.centre_host == u_host) mcopy = &c;
        for (auto& lf : c.leaves)
            if (lf.second == u_host) mcopy = &c;
    }
    if (!mcopy) throw std::logic_error("broom glue vertex not in any trimmed copy");

    // assemble B(k,t): spine ends at the star
    const int kp = int(sub_sets.size());  // path vertex count
    std::vector<int> spine_hosts, spine_blocks;
    // path hosts in path order, position 0 = v
    std::vector<int> sub_to_block{s_block};
    sub_to_block.insert(sub_to_block.end(), tail_blocks.begin(), tail_blocks.end());
    std::vector<int> P_host(static_cast<std::size_t>(kp)), P_block(static_cast<std::size_t>(kp));
    for (int i = 0; i < kp; ++i) {
        P_host[std::size_t(i)] = po.witness->assignment[std::size_t(i)];
        P_block[std::size_t(i)] =
            sub_to_block[std::size_t(po.witness->blocks_used[std::size_t(i)])];
    }

    Witness w;
    w.kind = WitnessKind::transversal;
    w.assignment.assign(std::size_t(k + t), -1);
    w.blocks_used.assign(std::size_t(k + t), -1);
    std::vector<std::pair<int, int>> glue_leaves;  // (block, host) attached at the spine end
    if (r_is_centre) {
        // spine: P reversed, then the star centre u
        if (kp != k - 1) {
            out.stage("assembly", "path length k-1", std::to_string(kp), false);
            out.finalize_failure();
            return out;
        }
        w.assignment[std::size_t(k - 1)] = u_host;
        w.blocks_used[std::size_t(k - 1)] = r_block;
        for (int i = 0; i < kp; ++i) {
            w.assignment[std::size_t(k - 2 - i)] = P_host[std::size_t(i)];
            w.blocks_used[std::size_t(k - 2 - i)] = P_block[std::size_t(i)];
        }
        glue_leaves = mcopy->leaves;
    } else {
        // spine: P reversed, then the leaf u, then the star centre
        if (kp != k - 2) {
            out.stage("assembly", "path length k-2", std::to_string(kp), false);
            out.finalize_failure();
            return out;
        }
        w.assignment[std::size_t(k - 1)] = mcopy->centre_host;
        w.blocks_used[std::size_t(k - 1)] = mcopy->centre_block;
        w.assignment[std::size_t(k - 2)] = u_host;
        w.blocks_used[std::size_t(k - 2)] = r_block;
        for (int i = 0; i < kp; ++i) {
            w.assignment[std::size_t(k - 3 - i)] = P_host[std::size_t(i)];
            w.blocks_used[std::size_t(k - 3 - i)] = P_block[std::size_t(i)];
        }
        for (auto& lf : mcopy->leaves)
            if (lf.second != u_host) glue_leaves.push_back(lf);
    }
    if (int(glue_leaves.size()) != t) {
        out.stage("assembly", "t leaves at the spine end", std::to_string(glue_leaves.size()),
                  false);
        out.finalize_failure();
        return out;
    }
    for (int li = 0; li < t; ++li) {
        w.assignment[std::size_t(k + li)] = glue_leaves[std::size_t(li)].second;
        w.blocks_used[std::size_t(k + li)] = glue_leaves[std::size_t(li)].first;
    }
    out.finish(b, patterns::broom(k, t), std::move(w));
    return out;
}

}  // namespace blkd
