#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "metrics.hpp"
#include "rational.hpp"

namespace blkd {

struct BinomBound {
    Int binom;
    Rat bound;  // rational over-approximation of (e n / k)^k, upper end of the e interval
    bool holds = false;
};
BinomBound binom_upper(unsigned n, unsigned k);

// coeff * W^{p/q}
struct ThresholdSpec {
    std::string name;
    Rat coeff;
    unsigned p = 1, q = 1;
    PowThreshold at(const Int& W) const { return PowThreshold{coeff, W, p, q}; }
};

enum class PremiseKind { coherent, cohesive };

// One theorem's constants, exact. Finders take their default parameters from
// here; nothing else hard-codes an epsilon.
struct RegimeCard {
    std::string theorem;
    Rat eps;
    std::string eps_factored;  // symbolic form; the brooms literal has hundreds of digits
    std::optional<Rat> c;
    std::optional<Rat> tau;
    PremiseKind premise = PremiseKind::coherent;
    std::vector<ThresholdSpec> thresholds;

    const ThresholdSpec& threshold(const std::string& name) const;
};

struct RegimeParams {
    int k = 0;
    int t = 0;
    int d = 0;
    std::optional<Rat> c;
};

RegimeCard regime_card(const std::string& theorem, const RegimeParams& prm);

struct RegimeVerdict {
    Verdict verdict = Verdict::unknown;
    long long local_deg = 0;
    bool degree_ok = true;
    std::optional<CoherenceReport> coherence;
    std::optional<CohesionReport> cohesion;
};

RegimeVerdict check_regime(const Blockade& b, const RegimeCard& card, std::uint64_t budget);

}  // namespace blkd
