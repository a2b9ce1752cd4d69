#include "blkd/bounds.hpp"

namespace blkd {

BinomBound binom_upper(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::invalid_argument("binom_upper: need n >= k >= 1");
    BinomBound r;
    Int c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * Int(n - i) / Int(i + 1);
    r.binom = c;
    r.bound = rpow(euler_hi() * Rat(Int(n), Int(k)), k);
    r.holds = Rat(r.binom) <= r.bound;
    return r;
}

const ThresholdSpec& RegimeCard::threshold(const std::string& name) const {
    for (const auto& t : thresholds)
        if (t.name == name) return t;
    throw std::invalid_argument("regime card '" + theorem + "' has no threshold '" + name + "'");
}

RegimeCard regime_card(const std::string& theorem, const RegimeParams& prm) {
    RegimeCard card;
    card.theorem = theorem;
    if (theorem == "betterpath") {
        if (prm.k < 2) throw std::invalid_argument("betterpath: need k >= 2");
        card.eps = Rat(1, Int(2 * prm.k - 2));
        card.eps_factored = "1/(2k-2), k=" + std::to_string(prm.k);
        card.premise = PremiseKind::coherent;
        card.thresholds.push_back({"selection", card.eps, 1, 1});
    } else if (theorem == "findstar") {
        if (prm.k < 1) throw std::invalid_argument("findstar: need k >= 1");
        Int K = (Int(1) << (prm.k - 1)) + 1;
        card.eps = Rat(1, ipow(3, unsigned(K)));
        card.eps_factored = "3^-" + K.str();
        card.premise = PremiseKind::coherent;
        card.thresholds.push_back({"coverage-third", Rat(1, 3), 1, 1});
    } else if (theorem == "brooms") {
        if (prm.k < 1 || prm.t < 1) throw std::invalid_argument("brooms: need k, t >= 1");
        unsigned kt2 = unsigned((prm.k + prm.t) * (prm.k + prm.t));
        card.tau = Rat(1, 6);
        card.eps = rpow(*card.tau, kt2) * Rat(1, ipow(3, unsigned(prm.k)));
        card.eps_factored =
            "(1/6)^" + std::to_string(kt2) + " * 3^-" + std::to_string(prm.k);
        card.premise = PremiseKind::coherent;
        card.thresholds.push_back({"path-on-cores", Rat(1, ipow(3, unsigned(prm.k))), 1, 1});
    } else if (theorem == "4cycle") {
        card.eps = Rat(1, 4);
        card.eps_factored = "1/4";
        card.c = Rat(1, 3);
        card.premise = PremiseKind::cohesive;
        card.thresholds.push_back({"good-degree", Rat(1, 2), 2, 3});   // W^{2/3}/2
        card.thresholds.push_back({"cross-degree", card.eps, 1, 3});   // eps W^{1/3}
    } else if (theorem == "kcycle") {
        if (prm.k < 5) throw std::invalid_argument("kcycle: need k >= 5");
        card.eps = Rat(1, Int(3 * prm.k));
        card.eps_factored = "1/(3k), k=" + std::to_string(prm.k);
        card.c = Rat(1, 2);
        card.premise = PremiseKind::cohesive;
        card.thresholds.push_back({"half-root", Rat(1, 2), 1, 2});  // W^{1/2}/2
    } else if (theorem == "counttree") {
        if (prm.k < 1) throw std::invalid_argument("counttree: need k >= 1");
        card.eps = Rat(1, ipow(4, unsigned(prm.k - 1)));
        card.eps_factored = "4^" + std::to_string(1 - prm.k);
        card.c = prm.c ? *prm.c : (prm.k >= 2 ? Rat(1, Int(prm.k - 1)) : Rat(1));
        card.premise = PremiseKind::cohesive;
    } else if (theorem == "caterpillar") {
        if (prm.d < 1 || prm.k < 1) throw std::invalid_argument("caterpillar: need d, k >= 1");
        card.eps = Rat(1, ipow(4, unsigned(prm.d)) * Int(prm.k));
        card.eps_factored = "4^-" + std::to_string(prm.d) + "/" + std::to_string(prm.k);
        card.c = Rat(1, Int(prm.d));
        card.premise = PremiseKind::cohesive;
        card.thresholds.push_back(
            {"head-degree", Rat(1, 2), unsigned(prm.d - 1), unsigned(prm.d)});  // W^{1-1/d}/2
    } else {
        throw std::invalid_argument("unknown theorem id '" + theorem + "'");
    }
    return card;
}

RegimeVerdict check_regime(const Blockade& b, const RegimeCard& card, std::uint64_t budget) {
    RegimeVerdict rv;
    rv.local_deg = local_degree(b);
    const Int W(b.width());
    if (card.premise == PremiseKind::coherent) {
        auto rep = check_coherence(b, card.eps, budget);
        rv.degree_ok = rep.degree_ok;
        rv.verdict = rep.verdict;
        rv.coherence = std::move(rep);
    } else {
        Rat thr = card.eps * Rat(W);
        rv.degree_ok = Rat(rv.local_deg) < thr;
        Rat c = card.c.value_or(Rat(1));
        unsigned p = unsigned(numerator(c)), q = unsigned(denominator(c));
        Int x = rat_ceil(thr);
        Int y = PowThreshold{card.eps, W, p, q}.ceil();
        auto rep = check_cohesion(b, std::max<Int>(x, 1), std::max<Int>(y, 1), budget);
        if (!rv.degree_ok || rep.verdict == Verdict::violated)
            rv.verdict = Verdict::violated;
        else if (rep.verdict == Verdict::satisfied && rep.exact)
            rv.verdict = Verdict::satisfied;
        else
            rv.verdict = Verdict::unknown;
        rv.cohesion = std::move(rep);
    }
    return rv;
}

}  // namespace blkd
