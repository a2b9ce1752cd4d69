#include <doctest.h>

#include "blkd/generators.hpp"
#include "blkd/io.hpp"
#include "blkd/metrics.hpp"
#include "blkd/oracle.hpp"

using namespace blkd;

TEST_CASE("lemma-random constants follow the stated inequalities") {
    auto rc = random_bipartite_constants(Rat(1, 2));
    CHECK(rc.c == 12);  // smallest integer above 16 ln 2 = 11.09
    CHECK(rc.d == 67);
    auto rc1 = random_bipartite_constants(Rat(1));
    CHECK(rc1.c == 3);  // smallest integer above 4 ln 2 = 2.77
    CHECK(rc1.d == 18);
}

TEST_CASE("sparse cohesive bipartite: n=12 eps=1/2 passes its exact audit") {
    auto res = gen_sparse_cohesive_bipartite(12, Rat(1, 2), GenSpec{7, 64, 2'000'000});
    CHECK(res.ok);
    CHECK(res.instance.length() == 2);
    CHECK(res.instance.width() == 12);
    for (auto& a : res.audit)
        if (a.name == "cohesion") CHECK(a.verified == "exact");
}

TEST_CASE("sparse cohesive bipartite at eps=1 has at least one edge") {
    auto res = gen_sparse_cohesive_bipartite(4, Rat(1), GenSpec{2, 64, 1'000'000});
    CHECK(res.instance.g.edge_count() >= 1);
}

TEST_CASE("generators are deterministic: same spec, identical bytes") {
    GenSpec s{9, 16, 200'000};
    auto a1 = gen_sparse_cohesive_bipartite(8, Rat(1, 2), s);
    auto a2 = gen_sparse_cohesive_bipartite(8, Rat(1, 2), s);
    CHECK(write_instance(a1.instance) == write_instance(a2.instance));

    auto b1 = gen_star_free_blockade(3, 0, 4, Rat(1, 8), s);
    auto b2 = gen_star_free_blockade(3, 0, 4, Rat(1, 8), s);
    CHECK(write_instance(b1.instance) == write_instance(b2.instance));

    auto c1 = gen_double_broom_counterexample(1, 3, Rat(1), s);
    auto c2 = gen_double_broom_counterexample(1, 3, Rat(1), s);
    CHECK(write_instance(c1.instance) == write_instance(c2.instance));

    auto d1 = gen_ordered_star_counterexample(3, Rat(1, 2), Rat(1, 2), 6, s);
    auto d2 = gen_ordered_star_counterexample(3, Rat(1, 2), Rat(1, 2), 6, s);
    CHECK(write_instance(d1.instance) == write_instance(d2.instance));
}

TEST_CASE("star-free: k=2 gives two blocks (no rainbow S_2 is possible at all)") {
    auto res = gen_star_free_blockade(2, 0, 10, Rat(1, 4), GenSpec{1, 8, 500'000});
    CHECK(res.instance.length() == 2);
    // an S_2 needs three blocks; the oracle precondition already rules it out
    CHECK_THROWS_AS(find_copy(res.instance, patterns::star(2), WitnessKind::rainbow, {}),
                    std::invalid_argument);
}

TEST_CASE("star-free: k=3 W=8 has no rainbow S_3, exhaustively") {
    auto res = gen_star_free_blockade(3, 0, 8, Rat(1, 8), GenSpec{3, 8, 500'000});
    CHECK(res.instance.length() == 4);
    auto orc = find_copy(res.instance, patterns::star(3), WitnessKind::rainbow, {});
    CHECK(orc.status == SearchStatus::none);
}

TEST_CASE("star-free respects a supplied host graph and its degree bound") {
    Graph host(8);
    host.add_edge(0, 4);
    auto res = gen_star_free_blockade(2, 1, 4, Rat(1, 4), GenSpec{5, 8, 200'000}, host);
    CHECK(res.instance.g.has_edge(0, 4));  // host edges survive the union
    Graph bad(8);
    bad.add_edge(0, 1);
    bad.add_edge(0, 2);
    CHECK_THROWS_AS(gen_star_free_blockade(2, 1, 4, Rat(1, 4), GenSpec{5, 8, 200'000}, bad),
                    std::invalid_argument);
}

TEST_CASE("double broom: layer accounting is internally consistent") {
    auto res = gen_double_broom_counterexample(1, 3, Rat(1), GenSpec{1, 8, 200'000});
    CHECK(res.instance.length() == 7);
    bool rvjl = false;
    for (auto& a : res.audit)
        if (a.name == "R-vs-JL") {
            rvjl = true;
            CHECK(a.pass);
        }
    CHECK(rvjl);
}

TEST_CASE("double broom: no transversal B(1,3,3) at tiny width") {
    for (std::uint64_t seed : {1ull, 2ull}) {
        auto res = gen_double_broom_counterexample(1, 3, Rat(1), GenSpec{seed, 8, 200'000});
        auto orc = find_copy(res.instance, patterns::double_broom(1, 3, 3),
                             WitnessKind::transversal, SearchBudget{20'000'000});
        CHECK(orc.status == SearchStatus::none);
    }
}

TEST_CASE("ordered star: structural guarantee and audits at small n") {
    auto res = gen_ordered_star_counterexample(3, Rat(1, 2), Rat(1, 2), 8, GenSpec{5, 8, 500'000});
    CHECK(res.instance.length() == 4);
    CHECK(res.instance.width() == 8);
    // B_0 is retained outside the blocks
    CHECK(res.instance.g.n() > 4 * 8);
    for (auto& a : res.audit) {
        if (a.name == "degree-cap") CHECK(a.pass);
        if (a.name == "closure-witness") CHECK(a.pass);
    }
    auto orc = find_copy(res.instance, patterns::ordered_star_centre_last(3),
                         WitnessKind::ordered_transversal, {});
    CHECK(orc.status == SearchStatus::none);
}

TEST_CASE("ordered star: strict powers demand the m^L form") {
    CHECK_THROWS_AS(gen_ordered_star_counterexample(3, Rat(1, 2), Rat(1, 2), 8,
                                                    GenSpec{5, 8, 100'000}, true, 1000),
                    std::invalid_argument);
}

TEST_CASE("ordered star parameter validation") {
    GenSpec s{1, 8, 100'000};
    CHECK_THROWS_AS(gen_ordered_star_counterexample(2, Rat(1, 2), Rat(1, 2), 8, s),
                    std::invalid_argument);  // t < 3
    CHECK_THROWS_AS(gen_ordered_star_counterexample(3, Rat(1, 4), Rat(1, 2), 8, s),
                    std::invalid_argument);  // c <= 1/t
}
