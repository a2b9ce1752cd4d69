#include "blkd/finders.hpp"

namespace blkd {

void require_valid(const Blockade& b) {
    auto vr = validate_blockade(b);
    if (!vr.ok) throw std::invalid_argument("invalid blockade: " + vr.errors.front());
}

// Inductive path construction. t_1 = 1; at each stage the current block's
// candidate set D (neighbour of the previous A-set, none earlier) is grown
// greedily in ascending id until some unused block j has at least eps|B_j|
// of its untouched vertices adjacent to the grown set; j becomes the next
// block. The back-trace picks least adjacent predecessors.
FinderOutcome find_transversal_path(const Blockade& b, const Rat& eps) {
    require_valid(b);
    if (eps <= 0) throw std::invalid_argument("find_transversal_path: eps must be positive");
    const int k = b.length();
    const std::size_t n = std::size_t(b.g.n());
    FinderOutcome out;

    std::vector<int> t;  // discovery order of block ids
    std::vector<Bitset> A(static_cast<std::size_t>(k));
    Bitset earlier(n);  // N(A_{t_1} u ... u A_{t_{i-2}})
    Bitset prevN(n);    // N(A_{t_{i-1}})
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    t.push_back(0);
    used[0] = 1;

    for (int i = 1; i <= k; ++i) {
        const int ti = t.back();
        Bitset D(n);
        if (i == 1) {
            D = b.block_bits[0];
        } else {
            D = b.block_bits[std::size_t(ti)];
            D &= prevN;
            D.and_not(earlier);
        }
        Rat dfloor = eps * Rat(Int(b.blocks[std::size_t(ti)].size()));
        out.stage("D(" + std::to_string(i) + ")", ">= " + rat_str(dfloor),
                  std::to_string(D.count()), i == 1 || Rat(Int(D.count())) >= dfloor);
        if (D.none()) {
            out.finalize_failure();
            return out;
        }
        if (i == k) {
            A[std::size_t(ti)] = D;
            break;
        }

        // C_j for unused j: no neighbour in any earlier A-set
        Bitset blockedBy = earlier | prevN;
        std::vector<Bitset> C(static_cast<std::size_t>(k), Bitset(n));
        for (int j = 0; j < k; ++j)
            if (!used[std::size_t(j)]) {
                C[std::size_t(j)] = b.block_bits[std::size_t(j)];
                C[std::size_t(j)].and_not(blockedBy);
            }

        Bitset grown(n), gN(n);
        int chosen = -1;
        std::size_t reached = 0;
        for (std::size_t v = D.first_set(); v < n && chosen < 0; v = D.next_set(v + 1)) {
            grown.set(v);
            gN |= b.g.row(int(v));
            for (int j = 0; j < k; ++j) {
                if (used[std::size_t(j)]) continue;
                std::size_t cnt = C[std::size_t(j)].count_and(gN);
                if (Rat(Int(cnt)) >= eps * Rat(Int(b.blocks[std::size_t(j)].size()))) {
                    chosen = j;
                    reached = cnt;
                    break;
                }
            }
        }
        if (chosen < 0) {
            out.stage("cover-threshold(" + std::to_string(i) + ")",
                      ">= eps|B_j| for some unused j", "none reached", false);
            out.finalize_failure();
            return out;
        }
        out.stage("select-A(" + std::to_string(i) + ")",
                  ">= " + rat_str(eps * Rat(Int(b.blocks[std::size_t(chosen)].size()))) +
                      " in C_" + std::to_string(chosen),
                  std::to_string(reached) + " via |A|=" + std::to_string(grown.count()), true);
        A[std::size_t(ti)] = grown;
        earlier |= prevN;
        prevN = gN;
        t.push_back(chosen);
        used[std::size_t(chosen)] = 1;
    }

    // back-trace, least adjacent predecessor
    std::vector<int> host(static_cast<std::size_t>(k), -1);
    host[std::size_t(k - 1)] = int(A[std::size_t(t[std::size_t(k - 1)])].first_set());
    for (int i = k - 2; i >= 0; --i) {
        Bitset cand = A[std::size_t(t[std::size_t(i)])] & b.g.row(host[std::size_t(i + 1)]);
        if (cand.none()) {
            out.stage("backtrace(" + std::to_string(i + 1) + ")", "adjacent predecessor", "none",
                      false);
            out.finalize_failure();
            return out;
        }
        host[std::size_t(i)] = int(cand.first_set());
    }

    Witness w;
    w.kind = WitnessKind::transversal;
    w.assignment = host;
    w.blocks_used = t;
    out.finish(b, patterns::path(k), std::move(w));
    return out;
}

}  // namespace blkd
