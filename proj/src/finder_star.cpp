#include "blkd/finders.hpp"

#include <algorithm>

namespace blkd {

Int StarPartition::value() const {
    Int v = 0;
    for (const auto& I : leafsets) v += Int(1) << I.size();
    return v;
}

Rat StarPartition::linkage(const Blockade& b) const {
    if (hubs.size() <= 1) return Rat(0);
    Rat best(0);
    for (int hi : hubs)
        for (int hj : hubs) {
            if (hi == hj) continue;
            Rat denom(Int(b.blocks[std::size_t(hj)].size()));
            sets[std::size_t(hi)].for_each([&](std::size_t v) {
                Rat r = Rat(Int(b.g.row(int(v)).count_and(sets[std::size_t(hj)]))) / denom;
                if (r > best) best = r;
            });
        }
    return best;
}

std::vector<std::string> verify_star_partition(const Blockade& b, const StarPartition& sp) {
    std::vector<std::string> bad;
    auto named = [](int blk) { return std::to_string(blk); };
    for (std::size_t s = 0; s < sp.hubs.size(); ++s) {
        int hub = sp.hubs[s];
        if (sp.sets[std::size_t(hub)].none()) bad.push_back("hub set " + named(hub) + " empty");
        for (int j : sp.leafsets[s]) {
            const Bitset& Aj = sp.sets[std::size_t(j)];
            if (Aj.none()) bad.push_back("leaf set " + named(j) + " empty");
            if (!covers(b.g, Aj, sp.sets[std::size_t(hub)]))
                bad.push_back("leaf " + named(j) + " does not cover hub " + named(hub));
            for (int j2 : sp.leafsets[s])
                if (j2 != j && !is_anticomplete(b.g, Aj, sp.sets[std::size_t(j2)]))
                    bad.push_back("leaves " + named(j) + "," + named(j2) + " not anticomplete");
            for (std::size_t s2 = 0; s2 < sp.hubs.size(); ++s2) {
                if (s2 == s) continue;
                if (!is_anticomplete(b.g, Aj, sp.sets[std::size_t(sp.hubs[s2])]))
                    bad.push_back("leaf " + named(j) + " meets hub " + named(sp.hubs[s2]));
                for (int j2 : sp.leafsets[s2])
                    if (!is_anticomplete(b.g, Aj, sp.sets[std::size_t(j2)]))
                        bad.push_back("leaf " + named(j) + " meets foreign leaf " + named(j2));
            }
        }
    }
    return bad;
}

// Star-partition descent: start with every block a hub; each round demotes
// the hub with the smallest leafset into the leafset of a hub one third of
// whose set it can cover, discarding the demoted hub's own leaves. At t=1 a
// leafset of size >= k reads off a rainbow S_k.
FinderOutcome find_rainbow_star(const Blockade& b, int k, std::optional<Rat> eps_in) {
    require_valid(b);
    if (k < 1) throw std::invalid_argument("find_rainbow_star: need k >= 1");
    const int K = b.length();
    const std::size_t n = std::size_t(b.g.n());
    const Rat eps = eps_in ? *eps_in : regime_card("findstar", {.k = k}).eps;
    FinderOutcome out;

    StarPartition sp;
    sp.sets.assign(std::size_t(K), Bitset(n));
    for (int i = 0; i < K; ++i) {
        sp.hubs.push_back(i);
        sp.leafsets.emplace_back();
        sp.sets[std::size_t(i)] = b.block_bits[std::size_t(i)];
    }

    int round = 0;
    while (sp.hubs.size() >= 2) {
        ++round;
        const int t = int(sp.hubs.size());
        std::string rname = "round" + std::to_string(round);

        // acting hubs in preference order: smallest leafset, ties lowest
        // block. In regime the first one works; off regime a demotion whose
        // shrink would empty a hub set is rejected and the next pair tried.
        std::vector<std::size_t> order(sp.hubs.size());
        for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bb) {
            if (sp.leafsets[a].size() != sp.leafsets[bb].size())
                return sp.leafsets[a].size() < sp.leafsets[bb].size();
            return sp.hubs[a] < sp.hubs[bb];
        });

        std::size_t act = sp.hubs.size(), target = sp.hubs.size();
        Bitset C(n), cN(n);
        for (std::size_t cand_act : order) {
            const int H = sp.hubs[cand_act];
            Bitset Ct(n), cNt(n);
            std::vector<std::size_t> crossed;
            const Bitset& AH = sp.sets[std::size_t(H)];
            for (std::size_t v = AH.first_set(); v < n && crossed.empty();
                 v = AH.next_set(v + 1)) {
                Ct.set(v);
                cNt |= b.g.row(int(v));
                for (std::size_t s = 0; s < sp.hubs.size(); ++s) {
                    if (s == cand_act) continue;
                    const Bitset& AS = sp.sets[std::size_t(sp.hubs[s])];
                    if (3 * AS.count_and(cNt) >= AS.count()) crossed.push_back(s);
                }
            }
            if (crossed.empty()) continue;
            std::sort(crossed.begin(), crossed.end(),
                      [&](std::size_t a, std::size_t bb) { return sp.hubs[a] < sp.hubs[bb]; });
            for (std::size_t cand_t : crossed) {
                bool empties = false;
                for (std::size_t s = 0; s < sp.hubs.size() && !empties; ++s) {
                    if (s == cand_act || s == cand_t) continue;
                    if (sp.sets[std::size_t(sp.hubs[s])].count_and_not(cNt) == 0) empties = true;
                }
                if (!empties) {
                    act = cand_act;
                    target = cand_t;
                    C = Ct;
                    cN = cNt;
                    break;
                }
            }
            if (act < sp.hubs.size()) break;
        }
        if (act == sp.hubs.size()) {
            out.stage(rname + ".cover-third",
                      ">= |A_s|/3 for some hub pair without emptying a hub set",
                      "no workable demotion", false);
            out.finalize_failure();
            return out;
        }
        const int H = sp.hubs[act];
        const int T = sp.hubs[target];
        out.stage(rname + ".cover-third",
                  ">= |A_" + std::to_string(T) + "|/3 = " +
                      rat_str(Rat(Int(sp.sets[std::size_t(T)].count()), 3)),
                  std::to_string(sp.sets[std::size_t(T)].count_and(cN)) + " covered by |C(" +
                      std::to_string(H) + ")|=" + std::to_string(C.count()),
                  true);

        // shrink: target keeps the covered part, other hubs keep the
        // uncovered part; the acting hub's set becomes C
        sp.sets[std::size_t(T)] &= cN;
        for (std::size_t s = 0; s < sp.hubs.size(); ++s) {
            if (s == act || s == target) continue;
            int S = sp.hubs[s];
            std::size_t before = sp.sets[std::size_t(S)].count();
            sp.sets[std::size_t(S)].and_not(cN);
            std::size_t after = sp.sets[std::size_t(S)].count();
            out.stage(rname + ".shrink(" + std::to_string(S) + ")",
                      ">= " + rat_str(Rat(Int(before), 3)), std::to_string(after),
                      3 * after >= before);
        }
        sp.sets[std::size_t(H)] = C;

        // restructure: H joins T's leafset, H's old leaves leave the element set
        for (int j : sp.leafsets[act]) sp.sets[std::size_t(j)] = Bitset(n);
        sp.leafsets[target].push_back(H);
        sp.hubs.erase(sp.hubs.begin() + std::ptrdiff_t(act));
        sp.leafsets.erase(sp.leafsets.begin() + std::ptrdiff_t(act));

        // invariants are maintained by construction; re-verify exactly
        auto bad = verify_star_partition(b, sp);
        if (!bad.empty()) throw std::logic_error("star partition invariant broke: " + bad.front());

        Rat cap = eps * Rat(ipow(3, unsigned(K - (t - 1))));
        Rat link = sp.linkage(b);
        out.stage(rname + ".linkage", "< " + rat_str(cap), rat_str(link), link < cap);
        out.stage(rname + ".value", ">= " + std::to_string(K), sp.value().str(),
                  sp.value() >= K);
    }

    const auto& I = sp.leafsets[0];
    out.stage("leafset-size", ">= " + std::to_string(k), std::to_string(I.size()),
              int(I.size()) >= k);
    if (int(I.size()) < k) {
        out.finalize_failure();
        return out;
    }
    std::vector<int> leaves(I);
    std::sort(leaves.begin(), leaves.end());
    leaves.resize(std::size_t(k));

    const int hub = sp.hubs[0];
    std::size_t u = sp.sets[std::size_t(hub)].first_set();
    Witness w;
    w.kind = WitnessKind::rainbow;
    w.assignment.push_back(int(u));
    w.blocks_used.push_back(hub);
    for (int j : leaves) {
        Bitset cand = sp.sets[std::size_t(j)] & b.g.row(int(u));
        if (cand.none()) {
            out.stage("read-off", "leaf neighbour of hub vertex", "none in block " +
                      std::to_string(j), false);
            out.finalize_failure();
            return out;
        }
        w.assignment.push_back(int(cand.first_set()));
        w.blocks_used.push_back(j);
    }
    out.finish(b, patterns::star(k), std::move(w));
    return out;
}

}  // namespace blkd
