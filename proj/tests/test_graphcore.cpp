#include <doctest.h>

#include "blkd/graph.hpp"
#include "blkd/io.hpp"

using namespace blkd;

namespace {

Blockade path3_blockade() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return Blockade(std::move(g), {{0}, {1}, {2}});
}

}  // namespace

TEST_CASE("validate: single block on three vertices") {
    Graph g(3);
    Blockade b(std::move(g), {{0, 1, 2}});
    auto r = validate_blockade(b);
    CHECK(r.ok);
    CHECK(r.width == 3);
    CHECK(r.length == 1);
}

TEST_CASE("validate: overlapping blocks rejected") {
    Graph g(3);
    Blockade b(std::move(g), {{0, 1}, {1, 2}});
    auto r = validate_blockade(b);
    CHECK(!r.ok);
    bool mentions_overlap = false;
    for (auto& e : r.errors)
        if (e.find("two blocks") != std::string::npos) mentions_overlap = true;
    CHECK(mentions_overlap);
}

TEST_CASE("validate: singleton path blockade") {
    auto b = path3_blockade();
    auto r = validate_blockade(b);
    CHECK(r.ok);
    CHECK(r.width == 1);
    CHECK(r.length == 3);
}

TEST_CASE("validate: empty block and range errors") {
    Graph g(2);
    Blockade b1(g, {{0}, {}});
    CHECK(!validate_blockade(b1).ok);
    Blockade b2(g, {{0}, {5}});
    CHECK(!validate_blockade(b2).ok);
}

TEST_CASE("verify_witness accepts the identity path embedding") {
    auto b = path3_blockade();
    Pattern p = patterns::path(3);
    Witness w{WitnessKind::transversal, {0, 1, 2}, {0, 1, 2}};
    CHECK(verify_witness(b, p, w));
}

TEST_CASE("verify_witness rejects a missing edge") {
    Graph g(2);
    Blockade b(std::move(g), {{0}, {1}});
    Pattern p = patterns::path(2);
    Witness w{WitnessKind::transversal, {0, 1}, {0, 1}};
    CHECK(verify_witness_reason(b, p, w) == WitnessFail::adjacency_mismatch);
    Graph g2(2);
    g2.add_edge(0, 1);
    Blockade b2(std::move(g2), {{0}, {1}});
    CHECK(verify_witness(b2, p, w));
}

TEST_CASE("verify_witness enforces the induced condition: C4 with a chord") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 2);  // chord
    Blockade b(std::move(g), {{0}, {1}, {2}, {3}});
    Pattern p = patterns::cycle(4);
    Witness w{WitnessKind::transversal, {0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(verify_witness_reason(b, p, w) == WitnessFail::adjacency_mismatch);
}

TEST_CASE("verify_witness kind rules") {
    auto b = path3_blockade();
    Pattern p2 = patterns::path(2);
    // rainbow may skip blocks
    Witness rb{WitnessKind::rainbow, {0, 1}, {0, 1}};
    CHECK(verify_witness(b, p2, rb));
    // transversal must hit all three
    Witness tv{WitnessKind::transversal, {0, 1}, {0, 1}};
    CHECK(verify_witness_reason(b, p2, tv) == WitnessFail::size_mismatch);
    // ordered must respect positions
    Pattern p3 = patterns::path(3, true);
    Witness od{WitnessKind::ordered_transversal, {0, 1, 2}, {0, 1, 2}};
    CHECK(verify_witness(b, p3, od));
    Witness od_bad{WitnessKind::ordered_transversal, {2, 1, 0}, {2, 1, 0}};
    CHECK(verify_witness_reason(b, p3, od_bad) == WitnessFail::block_multiplicity);
}

TEST_CASE("instance IO round-trips canonically") {
    auto b = path3_blockade();
    std::string text = write_instance(b);
    Blockade b2 = read_instance_string(text);
    CHECK(write_instance(b2) == text);
    CHECK(b2.length() == 3);
    CHECK(b2.g.has_edge(0, 1));
    CHECK(b2.g.has_edge(1, 2));
    CHECK(!b2.g.has_edge(0, 2));
}

TEST_CASE("parser: header, comments, duplicate edges") {
    std::string text =
        "# a comment\n"
        "blockade k=3 n=5\n"
        "block 0: 0 1\n"
        "block 1: 2\n"
        "block 2: 3 4\n"
        "edges:\n"
        "0 2\n"
        "2 0  # duplicate below\n"
        "0 2\n";
    Blockade b = read_instance_string(text);
    CHECK(b.length() == 3);
    CHECK(b.g.n() == 5);
    CHECK(b.g.edge_count() == 1);
}

TEST_CASE("parser: errors carry line numbers") {
    try {
        read_instance_string("blockade k=1 n=2\nblock 0: 0\nedges:\n0 5\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(read_instance_string("blockade k=1 n=1\nblock 0: 0\nedges:\n0 0\n"),
                    ParseError);
    CHECK_THROWS_AS(read_instance_string("blockade k=2 n=2\nblock 0: 0\nblock 0: 1\nedges:\n"),
                    ParseError);
    CHECK_THROWS_AS(read_instance_string("nonsense\n"), ParseError);
}

TEST_CASE("pattern IO") {
    Pattern p = patterns::ordered_star_centre_last(3);
    std::string text = write_pattern(p);
    Pattern p2 = read_pattern_string(text);
    CHECK(p2.ordered);
    CHECK(p2.g.n() == 4);
    CHECK(p2.g.has_edge(0, 3));
    CHECK(p2.g.has_edge(1, 3));
    CHECK(p2.g.has_edge(2, 3));
    CHECK(!p2.g.has_edge(0, 1));
}

TEST_CASE("adjacency stays symmetric under construction") {
    Graph g(6);
    g.add_edge(3, 1);
    g.add_edge(5, 0);
    CHECK(g.symmetric_irreflexive());
    CHECK(g.has_edge(1, 3));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
}
