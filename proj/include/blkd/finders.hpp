#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rational.hpp"

namespace blkd {

struct TraceStage {
    std::string name;
    std::string required;
    std::string measured;
    bool pass = true;
};

// Constructive-proof outcome: a verified witness, or a stage trace whose first
// failed entry is the proof step whose quantitative premise broke.
struct FinderOutcome {
    std::optional<Witness> witness;
    std::optional<Pattern> pattern;  // what the witness embeds
    std::vector<TraceStage> trace;
    std::optional<std::string> failure_stage;

    bool found() const { return witness.has_value(); }
    void stage(const std::string& name, const std::string& required, const std::string& measured,
               bool pass) {
        trace.push_back({name, required, measured, pass});
    }
    void merge_trace(const FinderOutcome& inner, const std::string& prefix) {
        for (const auto& s : inner.trace)
            trace.push_back({prefix + s.name, s.required, s.measured, s.pass});
    }
    // call before returning without a witness
    void finalize_failure() {
        if (witness) return;
        for (const auto& s : trace)
            if (!s.pass) {
                failure_stage = s.name;
                return;
            }
        failure_stage = trace.empty() ? "start" : trace.back().name;
    }
    // every returned witness goes through the trusted checker first
    void finish(const Blockade& b, Pattern p, Witness w) {
        bool ok = verify_witness(b, p, w);
        stage("final-verify", "witness verifies", ok ? "ok" : "rejected", ok);
        pattern = std::move(p);
        if (ok)
            witness = std::move(w);
        else
            finalize_failure();
    }
};

// tau-covering digraph with per-block cores and per-arc cover sets
struct CoveringDigraph {
    int k = 0;
    Rat tau;
    std::vector<std::pair<int, int>> arcs;  // insertion order
    std::vector<Bitset> covers;             // X_{ij}, parallel to arcs
    std::vector<Bitset> cores;              // A_i, indexed by block

    bool has_arc(int i, int j) const {
        for (const auto& a : arcs)
            if (a.first == i && a.second == j) return true;
        return false;
    }
    std::vector<int> outdeg() const {
        std::vector<int> d(static_cast<std::size_t>(k), 0);
        for (const auto& a : arcs) ++d[std::size_t(a.first)];
        return d;
    }
    std::vector<int> indeg() const {
        std::vector<int> d(static_cast<std::size_t>(k), 0);
        for (const auto& a : arcs) ++d[std::size_t(a.second)];
        return d;
    }
};

CoveringDigraph build_covering_digraph(const Blockade& b, const Rat& tau);
// exact re-verification of all invariant families; empty result = clean
std::vector<std::string> verify_covering_digraph(const Blockade& b, const CoveringDigraph& cd);
// idempotence probe: would another augmentation pass add an arc?
bool can_augment(const Blockade& b, const CoveringDigraph& cd);

// hub/leafset structure driving the rainbow-star extraction
struct StarPartition {
    std::vector<int> hubs;                   // current hub blocks, in sequence order
    std::vector<std::vector<int>> leafsets;  // parallel to hubs
    std::vector<Bitset> sets;                // by block id; blocks outside the element set are empty

    Int value() const;
    Rat linkage(const Blockade& b) const;
};
std::vector<std::string> verify_star_partition(const Blockade& b, const StarPartition& sp);

FinderOutcome find_transversal_path(const Blockade& b, const Rat& eps);
FinderOutcome find_rainbow_star(const Blockade& b, int k, std::optional<Rat> eps = {});
FinderOutcome find_transversal_broom(const Blockade& b, int k, int t, std::optional<Rat> tau = {},
                                     std::optional<Rat> eps = {}, SearchBudget family_budget = {});
FinderOutcome find_transversal_c4(const Blockade& b, std::optional<Rat> eps = {},
                                  std::optional<Rat> c = {});
FinderOutcome find_transversal_cycle(const Blockade& b, std::optional<Rat> eps = {});
FinderOutcome find_ordered_caterpillar(const Blockade& b, const Pattern& p, int head,
                                       const std::vector<int>& C1, std::optional<Rat> eps, int d);
FinderOutcome embed_ordered_tree(const Blockade& b, const Pattern& p, std::optional<Rat> c = {},
                                 std::uint64_t budget = 10'000'000);

// shared precondition: blockade must validate
void require_valid(const Blockade& b);

}  // namespace blkd
