#include "blkd/finders.hpp"

namespace blkd {

namespace {

struct AugmentStep {
    Bitset Y;
    std::vector<Bitset> cores;
};

// Grow Y inside A_i (ascending id) until A_j picks up tau^{s+1}|B_j| covered
// vertices, then re-core; accept only if every bystander core keeps its floor.
std::optional<AugmentStep> attempt_augment(const Blockade& b, const CoveringDigraph& cd, int i,
                                           int j) {
    const std::size_t n = std::size_t(b.g.n());
    const unsigned s = unsigned(cd.arcs.size());
    const Rat floor_next = rpow(cd.tau, s + 1);

    Rat thrJ = floor_next * Rat(Int(b.blocks[std::size_t(j)].size()));
    Bitset Y(n), NY(n);
    bool reached = false;
    const Bitset& Ai = cd.cores[std::size_t(i)];
    for (std::size_t v = Ai.first_set(); v < n; v = Ai.next_set(v + 1)) {
        Y.set(v);
        NY |= b.g.row(int(v));
        if (Rat(Int(cd.cores[std::size_t(j)].count_and(NY))) >= thrJ) {
            reached = true;
            break;
        }
    }
    if (!reached) return std::nullopt;

    AugmentStep st;
    st.Y = Y;
    st.cores = cd.cores;
    st.cores[std::size_t(j)] &= NY;
    for (int h = 0; h < cd.k; ++h) {
        if (h == i || h == j) continue;
        st.cores[std::size_t(h)].and_not(NY);
        Rat flr = floor_next * Rat(Int(b.blocks[std::size_t(h)].size()));
        if (Rat(Int(st.cores[std::size_t(h)].count())) < flr) return std::nullopt;
    }
    return st;
}

}  // namespace

CoveringDigraph build_covering_digraph(const Blockade& b, const Rat& tau) {
    require_valid(b);
    if (tau <= 0 || tau >= Rat(1, 2))
        throw std::invalid_argument("build_covering_digraph: need 0 < tau < 1/2");
    CoveringDigraph cd;
    cd.k = b.length();
    cd.tau = tau;
    cd.cores = b.block_bits;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < cd.k && !changed; ++i)
            for (int j = 0; j < cd.k && !changed; ++j) {
                if (i == j || cd.has_arc(i, j)) continue;
                auto st = attempt_augment(b, cd, i, j);
                if (st) {
                    cd.arcs.emplace_back(i, j);
                    cd.covers.push_back(st->Y);
                    cd.cores = std::move(st->cores);
                    changed = true;
                }
            }
    }
    auto bad = verify_covering_digraph(b, cd);
    if (!bad.empty()) throw std::logic_error("covering digraph invariant broke: " + bad.front());
    return cd;
}

std::vector<std::string> verify_covering_digraph(const Blockade& b, const CoveringDigraph& cd) {
    std::vector<std::string> bad;
    const unsigned z = unsigned(cd.arcs.size());
    const Rat floor_z = rpow(cd.tau, z);
    for (int i = 0; i < cd.k; ++i) {
        if (Rat(Int(cd.cores[std::size_t(i)].count())) <
            floor_z * Rat(Int(b.blocks[std::size_t(i)].size())))
            bad.push_back("core " + std::to_string(i) + " below tau^z floor");
    }
    for (std::size_t a = 0; a < cd.arcs.size(); ++a) {
        auto [i, j] = cd.arcs[a];
        const Bitset& X = cd.covers[a];
        if (X.count_and_not(b.block_bits[std::size_t(i)]) != 0)
            bad.push_back("cover of arc " + std::to_string(i) + "->" + std::to_string(j) +
                          " not inside its block");
        if (!covers(b.g, X, cd.cores[std::size_t(j)]))
            bad.push_back("arc " + std::to_string(i) + "->" + std::to_string(j) +
                          ": X does not cover A_j");
        for (int h = 0; h < cd.k; ++h) {
            if (h == i || h == j) continue;
            if (!is_anticomplete(b.g, X, cd.cores[std::size_t(h)]))
                bad.push_back("arc " + std::to_string(i) + "->" + std::to_string(j) +
                              ": X meets core " + std::to_string(h));
        }
        for (std::size_t a2 = 0; a2 < cd.arcs.size(); ++a2) {
            if (a2 == a) continue;
            auto [i2, j2] = cd.arcs[a2];
            if (i != i2 && i != j2 && i2 != j) {
                if (!is_anticomplete(b.g, X, cd.covers[a2]))
                    bad.push_back("covers of arcs " + std::to_string(i) + "->" + std::to_string(j) +
                                  " and " + std::to_string(i2) + "->" + std::to_string(j2) +
                                  " not anticomplete");
            }
        }
    }
    return bad;
}

bool can_augment(const Blockade& b, const CoveringDigraph& cd) {
    for (int i = 0; i < cd.k; ++i)
        for (int j = 0; j < cd.k; ++j) {
            if (i == j || cd.has_arc(i, j)) continue;
            if (attempt_augment(b, cd, i, j)) return true;
        }
    return false;
}

}  // namespace blkd
