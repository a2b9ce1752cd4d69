#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace blkd {

// One audited fact about a generated instance: what the construction claims,
// what was measured, and how hard the verification was.
struct AuditCheck {
    std::string name;
    std::string required;
    std::string measured;
    std::string verified;  // "exact" | "sampled" | "unverified"
    bool pass = true;
};

struct GenResult {
    Blockade instance;
    std::vector<AuditCheck> audit;
    int attempts = 1;
    bool ok = true;  // audit accepted within max_attempts
    std::vector<std::string> notes;
};

struct GenSpec {
    std::uint64_t seed = 0;
    int max_attempts = 64;
    std::uint64_t audit_budget = 2'000'000;
};

// Degree/cohesion constants of the random bipartite construction, computed
// from eps exactly by integer search against certified e and log-2 bounds.
struct RandomBipartiteConstants {
    Int c;  // smallest integer with c eps^2 > 4 ln 2
    Int d;  // smallest integer with (d/(2ce))^d > 4
};
RandomBipartiteConstants random_bipartite_constants(const Rat& eps);

// sparse cohesive bipartite pair: sample on doubled sides at p = c/n, delete
// the n highest-degree vertices per side, audit degree < d and
// (ceil(eps n), ceil(eps n))-cohesion, resample on failure
GenResult gen_sparse_cohesive_bipartite(int n, const Rat& eps, const GenSpec& spec);

// recursive star-free blockade of length 2^{k-1}; host H optional (edgeless
// by default), max degree at most p
GenResult gen_star_free_blockade(int k, int p, int W, const Rat& eps, const GenSpec& spec,
                                 const std::optional<Graph>& host = {});

// three-layer double-broom counterexample on k+6 blocks
GenResult gen_double_broom_counterexample(int k, int W, const Rat& eps, const GenSpec& spec);

// ordered-star counterexample on t+1 blocks of size n plus a retained B_0
// layer outside every block; strict_powers demands the m^L integrality form
GenResult gen_ordered_star_counterexample(int t, const Rat& c, const Rat& eps, int n,
                                          const GenSpec& spec, bool strict_powers = false,
                                          long max_strict_n = 1'000'000);

}  // namespace blkd
