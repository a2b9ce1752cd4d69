#include <doctest.h>

#include "blkd/bounds.hpp"
#include "blkd/finders.hpp"
#include "blkd/generators.hpp"
#include "blkd/jsonio.hpp"

using namespace blkd;

TEST_CASE("binomial estimate: small cases") {
    auto r1 = binom_upper(5, 5);
    CHECK(r1.binom == 1);
    CHECK(r1.holds);

    auto r2 = binom_upper(4, 2);
    CHECK(r2.binom == 6);
    CHECK(r2.bound > Rat(29));  // (2e)^2 = 29.55...
    CHECK(r2.bound < Rat(30));
    CHECK(r2.holds);

    CHECK_THROWS_AS(binom_upper(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(binom_upper(3, 0), std::invalid_argument);
}

TEST_CASE("regime card spot values match the stated constants") {
    CHECK(regime_card("betterpath", {.k = 4}).eps == Rat(1, 6));
    CHECK(regime_card("findstar", {.k = 3}).eps == Rat(1, 243));  // 3^-5, K = 2^2+1
    CHECK(regime_card("4cycle", {}).eps == Rat(1, 4));
    CHECK(*regime_card("4cycle", {}).c == Rat(1, 3));
    CHECK(regime_card("kcycle", {.k = 5}).eps == Rat(1, 15));
    CHECK(*regime_card("kcycle", {.k = 5}).c == Rat(1, 2));
    CHECK(regime_card("counttree", {.k = 3}).eps == Rat(1, 16));
    CHECK(regime_card("caterpillar", {.k = 4, .d = 2}).eps == Rat(1, 64));  // 4^-2 / 4
    CHECK_THROWS_AS(regime_card("nonsense", {}), std::invalid_argument);
}

TEST_CASE("brooms card is exact and reported in factored form") {
    auto card = regime_card("brooms", {.k = 11, .t = 2});
    CHECK(*card.tau == Rat(1, 6));
    CHECK(card.eps_factored == "(1/6)^169 * 3^-11");
    CHECK(card.eps == Rat(1, ipow(6, 169) * ipow(3, 11)));
    CHECK(numerator(card.eps) == 1);
}

TEST_CASE("card evaluation is deterministic") {
    auto c1 = regime_card("brooms", {.k = 5, .t = 2});
    auto c2 = regime_card("brooms", {.k = 5, .t = 2});
    CHECK(c1.eps == c2.eps);
    CHECK(to_json(c1).dump() == to_json(c2).dump());
}

TEST_CASE("check_regime agrees with direct metrics calls") {
    Graph g(2);
    g.add_edge(0, 1);
    Blockade b(std::move(g), {{0}, {1}});
    auto card = regime_card("betterpath", {.k = 2});  // eps = 1/2
    auto rv = check_regime(b, card, 1'000'000);
    auto direct = check_coherence(b, card.eps, 1'000'000);
    CHECK(rv.verdict == direct.verdict);
    CHECK(rv.local_deg == local_degree(b));

    auto card4 = regime_card("4cycle", {});
    Graph g4(4);
    Blockade b4(std::move(g4), {{0}, {1}, {2}, {3}});
    auto rv4 = check_regime(b4, card4, 1'000'000);
    CHECK(rv4.cohesion.has_value());
    CHECK(rv4.degree_ok);  // empty graph: local degree 0 < W/4? 0 < 1/4 yes
}

TEST_CASE("wiring: finders default their thresholds from the card") {
    // same outcome whether the card constants are implied or passed explicitly
    Graph g4(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) g4.add_edge(i, j);
    Blockade b4(std::move(g4), {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    auto card = regime_card("4cycle", {});
    auto implicit = find_transversal_c4(b4);
    auto explicit_ = find_transversal_c4(b4, card.eps, card.c);
    CHECK(to_json(implicit).dump() == to_json(explicit_).dump());

    Graph g5(5);
    Blockade b5(std::move(g5), {{0}, {1}, {2}, {3}, {4}});
    auto cardc = regime_card("kcycle", {.k = 5});
    auto ci = find_transversal_cycle(b5);
    auto ce = find_transversal_cycle(b5, cardc.eps);
    CHECK(to_json(ci).dump() == to_json(ce).dump());
}
