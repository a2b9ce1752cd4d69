#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace blkd {

enum class Verdict { satisfied, violated, unknown };
std::string verdict_name(Verdict v);

struct AnticompletePair {
    int i = -1, j = -1;
    std::vector<int> X, Y;
};

// Three-valued cohesion outcome. A violation witness is definitive however it
// was found; "exact" is only claimed when the subset enumeration ran to
// completion over every ordered block pair.
struct CohesionReport {
    Verdict verdict = Verdict::satisfied;
    bool exact = true;
    std::optional<AnticompletePair> witness;
    std::optional<AnticompletePair> best_pair;  // heuristic's best, when unknown
    std::uint64_t subsets_examined = 0;
    int boundary_hits = 0;
    Int x = 0, y = 0;
    std::string mode() const { return exact ? "exact" : "heuristic-only"; }
};

long long local_degree(const Blockade& b);

// (x,y)-cohesion with absolute integer thresholds, x on the first block of
// each ordered pair. Budget counts subsets examined.
CohesionReport check_cohesion(const Blockade& b, const Int& x, const Int& y, std::uint64_t budget);

struct DegreeViolation {
    int v = -1, i = -1, j = -1;
    long long count = 0;
    Rat threshold;
};

struct CoherenceReport {
    Verdict verdict = Verdict::satisfied;
    Rat eps;
    bool degree_ok = true;
    std::optional<DegreeViolation> degree_witness;
    bool pairs_exact = true;
    std::optional<AnticompletePair> pair_witness;
    std::uint64_t subsets_examined = 0;
    int boundary_hits = 0;
};

// eps-coherence: per-vertex cross degree strictly below eps|B_j|, plus the
// no-anticomplete-pair condition at per-block thresholds eps|B_i|, eps|B_j|.
CoherenceReport check_coherence(const Blockade& b, const Rat& eps, std::uint64_t budget);

struct ManyEdgesReport {
    bool premises_checked = false;
    Verdict premises = Verdict::unknown;
    long long local_deg = 0;
    Int low_degree_count = 0;  // vertices of B_2 with at most W^{1-c}/2 neighbours in X
    std::string degree_threshold;
    std::string bound;
    bool bound_exceeds_one = false;
    bool conclusion_holds = false;  // count < eps W^c, strict
    int boundary_hits = 0;
};

// Lemma about low-degree vertices on a k=2 blockade; X is a subset of block 0
// with |X| >= 2 eps W (precondition).
ManyEdgesReport check_manyedges(const Blockade& b, const Rat& eps, const Rat& c,
                                const std::vector<int>& X, bool verify_premises,
                                std::uint64_t budget);

}  // namespace blkd
