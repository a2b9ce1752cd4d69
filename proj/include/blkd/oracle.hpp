#pragma once

#include <cstdint>
#include <optional>

#include "graph.hpp"
#include "rational.hpp"

namespace blkd {

// Brute-force ground truth. No cleverness on purpose: backtracking over block
// assignments with incremental induced-adjacency pruning, exhaustive unless
// the budget trips. A hit budget is reported as indeterminate, never as a
// negative.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

enum class SearchStatus { found, none, indeterminate };

struct FindResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;
};

struct CountResult {
    bool exact = true;  // false: budget exceeded, count meaningless
    Int count = 0;
    std::uint64_t nodes = 0;
};

// Unordered kinds count distinct vertex-set images (bijections to blocks are
// enumerated one representative per automorphism coset); the ordered kind
// counts assignments. find_copy returns the first witness in the fixed search
// order (block subsets, then coset representatives, then assignments, all
// ascending), so the result is deterministic.
FindResult find_copy(const Blockade& b, const Pattern& p, WitnessKind kind, SearchBudget budget = {});
CountResult count_copies(const Blockade& b, const Pattern& p, WitnessKind kind,
                         SearchBudget budget = {});

// exposed for the dual-implementation tests
std::vector<std::vector<int>> pattern_automorphisms(const Pattern& p);
std::vector<std::vector<int>> bijection_coset_reps(const Pattern& p);

}  // namespace blkd
