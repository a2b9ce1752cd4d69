#include <algorithm>

#include "blkd/finders.hpp"

namespace blkd {

namespace {

// Induced path v_{i_1}-...-v_{i_s} with v_{i_r} in D_{i_r}: pick the first
// vertex with W^{1/2}/2 neighbours in the next set, keep those neighbours,
// drop its neighbours everywhere else, recurse.
struct PathHelper {
    const Graph& g;
    const Int& W;
    FinderOutcome& out;
    int level = 0;

    std::optional<std::vector<int>> run(std::vector<Bitset> D) {
        ++level;
        const std::size_t s = D.size();
        if (s == 1) {
            if (D[0].none()) return fail("set empty");
            return std::vector<int>{int(D[0].first_set())};
        }
        PowThreshold thr{Rat(1, 2), W, 1, 2};
        int v1 = -1;
        std::size_t got = 0;
        for (std::size_t v = D[0].first_set(); v < D[0].size(); v = D[0].next_set(v + 1)) {
            std::size_t cnt = g.row(int(v)).count_and(D[1]);
            if (thr.at_least(Int(cnt))) {
                v1 = int(v);
                got = cnt;
                break;
            }
        }
        if (v1 < 0) return fail("no vertex with W^(1/2)/2 neighbours ahead");
        out.stage("path-helper(" + std::to_string(level) + ")", ">= " + thr.str(),
                  std::to_string(got), true);
        std::vector<Bitset> rest(D.begin() + 1, D.end());
        rest[0] &= g.row(v1);
        for (std::size_t r = 1; r < rest.size(); ++r) rest[r].and_not(g.row(v1));
        auto tail = run(std::move(rest));
        if (!tail) return std::nullopt;
        tail->insert(tail->begin(), v1);
        return tail;
    }

    std::optional<std::vector<int>> fail(const std::string& why) {
        out.stage("path-helper(" + std::to_string(level) + ")", "extendable", why, false);
        return std::nullopt;
    }
};

}  // namespace

// Four-cycle: classify block-3/block-4 edges by one- and two-sided goodness,
// try the direct completion, otherwise pivot through a two-sided vertex of
// block 3 and close through block 4.
FinderOutcome find_transversal_c4(const Blockade& b, std::optional<Rat> eps_in,
                                  std::optional<Rat> c_in) {
    require_valid(b);
    if (b.length() != 4) throw std::invalid_argument("find_transversal_c4: need k = 4");
    auto cardc = regime_card("4cycle", {});
    const Rat eps = eps_in.value_or(cardc.eps);
    const Rat c = c_in.value_or(*cardc.c);
    if (c <= 0 || c >= 1) throw std::invalid_argument("find_transversal_c4: need 0 < c < 1");
    const Int W(b.width());
    const std::size_t n = std::size_t(b.g.n());
    const unsigned cp = unsigned(numerator(c)), cq = unsigned(denominator(c));
    FinderOutcome out;

    PowThreshold good{Rat(1, 2), W, cq - cp, cq};   // W^{1-c}/2
    PowThreshold cross{eps, W, cp, cq};             // eps W^c

    // exact goodness statistics over the B3-B4 edges
    std::size_t edges34 = 0, good1 = 0, good2 = 0;
    int e3 = -1, e4 = -1;             // first edge that is 2-good both ways
    Bitset C1(n), C2(n);
    bool have_pair = false, direct = false;
    int d1 = -1, d2 = -1;
    for (int v3 : b.blocks[2]) {
        bool g1 = good.at_least(Int(b.g.row(v3).count_and(b.block_bits[3])));
        Bitset n4 = b.g.row(v3) & b.block_bits[3];
        for (std::size_t v4 = n4.first_set(); v4 < n; v4 = n4.next_set(v4 + 1)) {
            ++edges34;
            if (!g1) continue;
            ++good1;
            Bitset c2 = b.g.row(int(v4)) & b.block_bits[1];
            c2.and_not(b.g.row(v3));
            if (!good.at_least(Int(c2.count()))) continue;
            ++good2;
            if (have_pair || direct) continue;
            Bitset c1 = b.g.row(v3) & b.block_bits[0];
            c1.and_not(b.g.row(int(v4)));
            if (!good.at_least(Int(c1.count()))) continue;
            // first edge 2-good in both orientations; commit to it
            e3 = v3;
            e4 = int(v4);
            C1 = c1;
            C2 = c2;
            have_pair = true;
            for (std::size_t u1 = c1.first_set(); u1 < n && !direct; u1 = c1.next_set(u1 + 1))
                if (b.g.row(int(u1)).intersects(c2)) {
                    d1 = int(u1);
                    Bitset hit = b.g.row(int(u1)) & c2;
                    d2 = int(hit.first_set());
                    direct = true;
                }
        }
    }
    out.stage("edge-classification",
              "2-good edges exist (threshold " + good.str() + ")",
              std::to_string(edges34) + " edges, " + std::to_string(good1) + " 1-good, " +
                  std::to_string(good2) + " 2-good",
              have_pair || direct);
    if (!have_pair) {
        out.finalize_failure();
        return out;
    }

    Pattern c4 = patterns::cycle(4);
    if (direct) {
        Witness w;
        w.kind = WitnessKind::transversal;
        w.assignment = {d1, d2, e4, e3};
        w.blocks_used = {0, 1, 3, 2};
        out.stage("direct-completion", "edge between C1 and C2", "found", true);
        out.finish(b, c4, std::move(w));
        return out;
    }
    out.stage("direct-completion", "edge between C1 and C2", "anticomplete; branch (4)", true);

    // (4): v3 with eps W^c neighbours in both C1 and C2
    int v3p = -1;
    for (int v : b.blocks[2]) {
        Int in1((long long)b.g.row(v).count_and(C1));
        Int in2((long long)b.g.row(v).count_and(C2));
        if (cross.at_least(in1) && cross.at_least(in2)) {
            v3p = v;
            break;
        }
    }
    out.stage("two-sided-v3", ">= " + cross.str() + " into C1 and C2",
              v3p >= 0 ? "v3=" + std::to_string(v3p) : "none", v3p >= 0);
    if (v3p < 0) {
        out.finalize_failure();
        return out;
    }

    Bitset A1 = C1 & b.g.row(v3p);
    Bitset A2 = C2 & b.g.row(v3p);
    int v4p = -1;
    for (int v : b.blocks[3]) {
        if (b.g.has_edge(v3p, v)) continue;
        if (b.g.row(v).intersects(A1) && b.g.row(v).intersects(A2)) {
            v4p = v;
            break;
        }
    }
    out.stage("closing-v4", "neighbour in A1 and A2, nonadjacent to v3",
              v4p >= 0 ? "v4=" + std::to_string(v4p) : "none", v4p >= 0);
    if (v4p < 0) {
        out.finalize_failure();
        return out;
    }
    int v1 = int((A1 & b.g.row(v4p)).first_set());
    int v2 = int((A2 & b.g.row(v4p)).first_set());
    Witness w;
    w.kind = WitnessKind::transversal;
    w.assignment = {v1, v3p, v2, v4p};
    w.blocks_used = {0, 2, 1, 3};
    out.finish(b, c4, std::move(w));
    return out;
}

// k-cycle for k >= 5, following the proof's role relabelling: v1 sees blocks
// 2 and 3; a minimal C2 covers a third of some later block (renamed 4); v3
// reaches into block 5; then one of three closures through the path helper.
FinderOutcome find_transversal_cycle(const Blockade& b, std::optional<Rat> eps_in) {
    require_valid(b);
    const int k = b.length();
    if (k < 5) throw std::invalid_argument("find_transversal_cycle: need k >= 5");
    auto card = regime_card("kcycle", {.k = k});
    const Rat eps = eps_in.value_or(card.eps);
    const Int W(b.width());
    const std::size_t n = std::size_t(b.g.n());
    FinderOutcome out;
    PowThreshold half{Rat(1, 2), W, 1, 2};  // W^{1/2}/2

    // role r (1-based like the proof) -> block id; roles 4..k get relabelled
    std::vector<int> role(std::size_t(k + 1));
    for (int i = 1; i <= k; ++i) role[std::size_t(i)] = i - 1;
    auto B = [&](int r) -> const Bitset& { return b.block_bits[std::size_t(role[std::size_t(r)])]; };

    int v1 = -1;
    for (std::size_t v = B(1).first_set(); v < n; v = B(1).next_set(v + 1)) {
        if (half.at_least(Int(b.g.row(int(v)).count_and(B(2)))) &&
            half.at_least(Int(b.g.row(int(v)).count_and(B(3))))) {
            v1 = int(v);
            break;
        }
    }
    out.stage("v1-selection", ">= " + half.str() + " into blocks 2 and 3",
              v1 >= 0 ? "v1=" + std::to_string(v1) : "none", v1 >= 0);
    if (v1 < 0) {
        out.finalize_failure();
        return out;
    }

    std::vector<Bitset> A(std::size_t(k + 1), Bitset(n));
    A[2] = B(2) & b.g.row(v1);
    A[3] = B(3) & b.g.row(v1);
    for (int r = 4; r <= k; ++r) {
        A[std::size_t(r)] = B(r);
        A[std::size_t(r)].and_not(b.g.row(v1));
    }

    // minimal C2 covering a third of some A_j, j >= 4
    Bitset C2(n), c2N(n);
    int hit_role = -1;
    for (std::size_t v = A[2].first_set(); v < n && hit_role < 0; v = A[2].next_set(v + 1)) {
        C2.set(v);
        c2N |= b.g.row(int(v));
        for (int r = 4; r <= k; ++r) {
            std::size_t covered = A[std::size_t(r)].count_and(c2N);
            if (3 * covered >= b.blocks[std::size_t(role[std::size_t(r)])].size()) {
                hit_role = r;
                break;
            }
        }
    }
    out.stage("C2-growth", ">= |B_j|/3 of A_j for some j >= 4",
              hit_role > 0 ? "block " + std::to_string(role[std::size_t(hit_role)]) +
                                 " via |C2|=" + std::to_string(C2.count())
                           : "exhausted A_2",
              hit_role > 0);
    if (hit_role < 0) {
        out.finalize_failure();
        return out;
    }
    std::swap(role[4], role[std::size_t(hit_role)]);

    // rebuild the A-sets under the relabelling, then refine by C2 coverage
    std::vector<Bitset> C(std::size_t(k + 1), Bitset(n));
    {
        Bitset a4 = B(4);
        a4.and_not(b.g.row(v1));
        C[4] = a4 & c2N;
        for (int r = 5; r <= k; ++r) {
            Bitset ar = B(r);
            ar.and_not(b.g.row(v1));
            ar.and_not(c2N);
            C[std::size_t(r)] = ar;
        }
    }

    int v3 = -1;
    for (std::size_t v = A[3].first_set(); v < n; v = A[3].next_set(v + 1)) {
        if (half.at_least(Int(b.g.row(int(v)).count_and(C[5])))) {
            v3 = int(v);
            break;
        }
    }
    out.stage("v3-selection", ">= " + half.str() + " into C_5",
              v3 >= 0 ? "v3=" + std::to_string(v3) : "none", v3 >= 0);
    if (v3 < 0) {
        out.finalize_failure();
        return out;
    }

    std::vector<Bitset> D(std::size_t(k + 1), Bitset(n));
    D[5] = C[5] & b.g.row(v3);
    D[1] = B(1);
    D[1].and_not(b.g.row(v3));
    D[4] = C[4];
    D[4].and_not(b.g.row(v3));
    for (int r = 6; r <= k; ++r) {
        D[std::size_t(r)] = C[std::size_t(r)];
        D[std::size_t(r)].and_not(b.g.row(v3));
    }

    // case split on where D_4's C2-neighbours sit relative to v3
    Bitset c2_nonadj = C2;
    c2_nonadj.and_not(b.g.row(v3));
    Bitset c2_adj = C2 & b.g.row(v3);
    Bitset nn = b.g.neighbours_of_set(c2_nonadj);
    std::size_t cnt_non = D[4].count_and(nn);
    bool case1 = 2 * cnt_non >= D[4].count() && D[4].any();
    out.stage("case-split", ">= |D_4|/2 with a C2-neighbour nonadjacent to v3",
              std::to_string(cnt_non) + " of " + std::to_string(D[4].count()),
              D[4].any());
    if (D[4].none()) {
        out.finalize_failure();
        return out;
    }

    Pattern ck = patterns::cycle(k);
    auto emit_cycle = [&](const std::vector<std::pair<int, int>>& seq) {
        // seq: cyclic order of (role, host)
        Witness w;
        w.kind = WitnessKind::transversal;
        w.assignment.resize(std::size_t(k));
        w.blocks_used.resize(std::size_t(k));
        for (int i = 0; i < k; ++i) {
            w.assignment[std::size_t(i)] = seq[std::size_t(i)].second;
            w.blocks_used[std::size_t(i)] = role[std::size_t(seq[std::size_t(i)].first)];
        }
        out.finish(b, ck, std::move(w));
    };

    if (case1) {
        Bitset D2 = c2_nonadj;
        Bitset D4p = D[4] & nn;
        std::vector<Bitset> sets;
        std::vector<int> roles;
        for (int r = 5; r <= k; ++r) {
            sets.push_back(D[std::size_t(r)]);
            roles.push_back(r);
        }
        sets.push_back(D4p);
        roles.push_back(4);
        PathHelper ph{b.g, W, out};
        auto path = ph.run(sets);
        if (!path) {
            out.finalize_failure();
            return out;
        }
        int v4 = path->back();
        Bitset v2c = D2 & b.g.row(v4);
        out.stage("closure", "v2 in D2 adjacent to v4", v2c.any() ? "found" : "none", v2c.any());
        if (v2c.none()) {
            out.finalize_failure();
            return out;
        }
        int v2 = int(v2c.first_set());
        // cycle: v1 - v3 - v5 - ... - vk - v4 - v2 - v1
        std::vector<std::pair<int, int>> seq{{1, v1}, {3, v3}};
        for (std::size_t i = 0; i < path->size(); ++i)
            seq.emplace_back(roles[i], (*path)[i]);
        seq.emplace_back(2, v2);
        emit_cycle(seq);
        return out;
    }

    // case 2: grow a minimal D2 inside C2 ∩ N(v3) until half of D_4 or D_1
    // has a neighbour there
    Bitset D2(n), d2N(n);
    int which = 0;  // 1: D4 side reached, 2: D1 side reached
    for (std::size_t v = c2_adj.first_set(); v < n && which == 0; v = c2_adj.next_set(v + 1)) {
        D2.set(v);
        d2N |= b.g.row(int(v));
        if (2 * D[4].count_and(d2N) >= D[4].count())
            which = 1;
        else if (2 * D[1].count_and(d2N) >= D[1].count() && D[1].any())
            which = 2;
    }
    out.stage("D2-growth", ">= half of D_4 or D_1 reached",
              which ? (which == 1 ? "D4 side" : "D1 side") : "exhausted", which != 0);
    if (which == 0) {
        out.finalize_failure();
        return out;
    }

    std::vector<Bitset> sets;
    std::vector<int> roles;
    for (int r = 5; r <= k; ++r) {
        sets.push_back(D[std::size_t(r)]);
        roles.push_back(r);
    }
    if (which == 1) {
        Bitset D4p = D[4] & d2N;
        Bitset D1p = D[1];
        D1p.and_not(d2N);
        sets.push_back(D1p);
        roles.push_back(1);
        sets.push_back(D4p);
        roles.push_back(4);
        PathHelper ph{b.g, W, out};
        auto path = ph.run(sets);
        if (!path) {
            out.finalize_failure();
            return out;
        }
        int v4 = path->back();
        Bitset v2c = D2 & b.g.row(v4);
        out.stage("closure", "v2 in D2 adjacent to v4", v2c.any() ? "found" : "none", v2c.any());
        if (v2c.none()) {
            out.finalize_failure();
            return out;
        }
        int v2 = int(v2c.first_set());
        // cycle: v5 - ... - vk - v1' - v4 - v2 - v3 - v5
        std::vector<std::pair<int, int>> seq;
        for (std::size_t i = 0; i < path->size(); ++i)
            seq.emplace_back(roles[i], (*path)[i]);
        seq.emplace_back(2, v2);
        seq.emplace_back(3, v3);
        emit_cycle(seq);
        return out;
    }

    Bitset D1p = D[1] & d2N;
    Bitset D4p = D[4];
    D4p.and_not(d2N);
    sets.push_back(D4p);
    roles.push_back(4);
    sets.push_back(D1p);
    roles.push_back(1);
    PathHelper ph{b.g, W, out};
    auto path = ph.run(sets);
    if (!path) {
        out.finalize_failure();
        return out;
    }
    int v1p = path->back();
    Bitset v2c = D2 & b.g.row(v1p);
    out.stage("closure", "v2 in D2 adjacent to v1'", v2c.any() ? "found" : "none", v2c.any());
    if (v2c.none()) {
        out.finalize_failure();
        return out;
    }
    int v2 = int(v2c.first_set());
    // cycle: v5 - ... - vk - v4 - v1' - v2 - v3 - v5
    std::vector<std::pair<int, int>> seq;
    for (std::size_t i = 0; i < path->size(); ++i)
        seq.emplace_back(roles[i], (*path)[i]);
    seq.emplace_back(2, v2);
    seq.emplace_back(3, v3);
    emit_cycle(seq);
    return out;
}

}  // namespace blkd
