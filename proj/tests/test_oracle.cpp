#include <doctest.h>

#include "blkd/oracle.hpp"
#include "blkd/rng.hpp"
#include "naive_oracle.hpp"

using namespace blkd;

namespace {

Blockade random_blockade(int k, int per, const Rat& density, Rng& rng) {
    Graph g(k * per);
    for (int u = 0; u < k * per; ++u)
        for (int v = u + 1; v < k * per; ++v)
            if (u / per != v / per && rng.bernoulli(density)) g.add_edge(u, v);
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < k; ++i) {
        std::vector<int> blk;
        for (int v = i * per; v < (i + 1) * per; ++v) blk.push_back(v);
        blocks.push_back(std::move(blk));
    }
    return Blockade(std::move(g), std::move(blocks));
}

}  // namespace

TEST_CASE("find_copy: induced path across singleton blocks") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Blockade b(std::move(g), {{0}, {1}, {2}});
    auto r = find_copy(b, patterns::path(3), WitnessKind::transversal, {});
    REQUIRE(r.status == SearchStatus::found);
    CHECK(verify_witness(b, patterns::path(3), *r.witness));
}

TEST_CASE("count: two singleton blocks joined by an edge, ordered 2-path") {
    Graph g(2);
    g.add_edge(0, 1);
    Blockade b(std::move(g), {{0}, {1}});
    auto r = count_copies(b, patterns::path(2, true), WitnessKind::ordered_transversal, {});
    CHECK(r.exact);
    CHECK(r.count == 1);
}

TEST_CASE("count: complete bipartite 2x2, ordered 2-path gives 4") {
    Graph g(4);
    for (int a = 0; a < 2; ++a)
        for (int b2 = 2; b2 < 4; ++b2) g.add_edge(a, b2);
    Blockade b(std::move(g), {{0, 1}, {2, 3}});
    auto r = count_copies(b, patterns::path(2, true), WitnessKind::ordered_transversal, {});
    CHECK(r.exact);
    CHECK(r.count == 4);
}

TEST_CASE("automorphism machinery: star S_3") {
    Pattern s3 = patterns::star(3);
    CHECK(pattern_automorphisms(s3).size() == 6);   // leaves permute
    CHECK(bijection_coset_reps(s3).size() == 4);    // 4!/3!
}

TEST_CASE("budget exhaustion reports indeterminate, not none") {
    Rng rng(3);
    auto b = random_blockade(4, 5, Rat(1, 2), rng);
    auto r = find_copy(b, patterns::path(4), WitnessKind::transversal, SearchBudget{2});
    CHECK(r.status != SearchStatus::none);
    auto c = count_copies(b, patterns::path(4), WitnessKind::transversal, SearchBudget{2});
    CHECK(!c.exact);
}

TEST_CASE("find_copy returns a witness iff count is positive") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + int(rng.below(3));
        int per = 1 + int(rng.below(3));
        auto b = random_blockade(k, per, Rat(1 + rng.below(3), 4), rng);
        Pattern p = (trial % 2) ? patterns::path(k) : patterns::star(k - 1);
        for (auto kind : {WitnessKind::transversal, WitnessKind::ordered_transversal}) {
            auto f = find_copy(b, p, kind, {});
            auto c = count_copies(b, p, kind, {});
            REQUIRE(c.exact);
            CHECK((f.status == SearchStatus::found) == (c.count > 0));
            if (f.witness) {
                Pattern pp = p;
                CHECK(verify_witness(b, pp, *f.witness));
            }
        }
    }
}

TEST_CASE("counts agree with the naive enumerator across kinds") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 2 + int(rng.below(3));          // 2..4 blocks
        int per = 1 + int(rng.below(3));        // widths 1..3
        auto b = random_blockade(k, per, Rat(1 + rng.below(4), 5), rng);
        std::vector<Pattern> pats{patterns::path(k), patterns::star(k - 1)};
        if (k >= 3) pats.push_back(patterns::cycle(k));
        for (const auto& p : pats) {
            auto ct = count_copies(b, p, WitnessKind::transversal, {});
            REQUIRE(ct.exact);
            CHECK(ct.count == naive::count_transversal(b, p));
            auto co = count_copies(b, p, WitnessKind::ordered_transversal, {});
            CHECK(co.count == naive::count_ordered(b, p));
        }
        // rainbow with a smaller pattern
        Pattern small = patterns::path(k - 1 > 0 ? k - 1 : 1);
        auto cr = count_copies(b, small, WitnessKind::rainbow, {});
        REQUIRE(cr.exact);
        CHECK(cr.count == naive::count_rainbow(b, small));
    }
}

TEST_CASE("oracle preconditions") {
    Graph g(2);
    Blockade b(std::move(g), {{0}, {1}});
    CHECK_THROWS_AS(find_copy(b, patterns::path(3), WitnessKind::transversal, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_copy(b, patterns::path(3), WitnessKind::rainbow, {}),
                    std::invalid_argument);
    CHECK_NOTHROW(find_copy(b, patterns::path(2), WitnessKind::rainbow, {}));
}
