#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace blkd {

// Parameter-grid experiments with one CSV row per (grid point, seed). A run
// is a pure function of its config; the timing column is off by default so
// reruns are byte-identical.
struct SweepConfig {
    std::string experiment;  // "path-success" | "triangle-probe"
    int k = 2;
    std::vector<Rat> eps_list;
    std::vector<Rat> c_list;  // triangle probe only
    std::vector<int> W_list;
    std::vector<std::uint64_t> seeds;
    std::uint64_t audit_budget = 200'000;
    bool timing = false;
};

std::string run_sweep(const SweepConfig& cfg);

}  // namespace blkd
