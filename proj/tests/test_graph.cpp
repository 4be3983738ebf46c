#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "imst/errors.hpp"
#include "imst/graph.hpp"
#include "imst/random_graph.hpp"
#include "test_graphs.hpp"

using namespace imst;

TEST_CASE("parse_graph reads the edge-list format") {
    Graph g = parse_graph("p 3 3\ne 0 1 1\ne 1 2 2\ne 0 2 3");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0) == Edge{0, 0, 1, 1});
    CHECK(g.edge(1) == Edge{1, 1, 2, 2});
    CHECK(g.edge(2) == Edge{2, 0, 2, 3});
}

TEST_CASE("parse_graph accepts a single node without edges") {
    Graph g = parse_graph("p 1 0");
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph skips comments and blank lines") {
    Graph g = parse_graph("# header comment\n\np 2 1  # inline\n   \ne 0 1 7\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge(0).cost == 7);
}

TEST_CASE("parse_graph handles CRLF input") {
    Graph g = parse_graph("p 2 1\r\ne 0 1 -4\r\n");
    CHECK(g.edge(0).cost == -4);
}

TEST_CASE("parse_graph rejects bad input with line numbers") {
    SUBCASE("self-loop") {
        CHECK_THROWS_WITH_AS(parse_graph("p 2 1\ne 0 0 5"), "line 2: self-loop on node 0",
                             ParseError);
    }
    SUBCASE("endpoint out of range") {
        CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 2 5"), ParseError);
        try {
            parse_graph("p 2 1\ne 0 2 5");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("zero nodes") { CHECK_THROWS_AS(parse_graph("p 0 0"), ParseError); }
    SUBCASE("malformed header") { CHECK_THROWS_AS(parse_graph("p 3"), ParseError); }
    SUBCASE("duplicate header") { CHECK_THROWS_AS(parse_graph("p 2 0\np 2 0"), ParseError); }
    SUBCASE("edge before header") { CHECK_THROWS_AS(parse_graph("e 0 1 2\np 2 1"), ParseError); }
    SUBCASE("unknown line type") { CHECK_THROWS_AS(parse_graph("p 2 1\nq 0 1 2"), ParseError); }
    SUBCASE("missing header") { CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError); }
    SUBCASE("too few edges") { CHECK_THROWS_AS(parse_graph("p 3 2\ne 0 1 1"), ParseError); }
    SUBCASE("too many edges") {
        CHECK_THROWS_AS(parse_graph("p 3 1\ne 0 1 1\ne 1 2 1"), ParseError);
    }
    SUBCASE("malformed edge line") { CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 1"), ParseError); }
    SUBCASE("non-integer cost") { CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 1 x"), ParseError); }
    SUBCASE("cost overflows int64") {
        CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 1 9223372036854775808"), ParseError);
    }
    SUBCASE("int64 extremes are fine") {
        Graph g = parse_graph("p 2 2\ne 0 1 9223372036854775807\ne 0 1 -9223372036854775808");
        CHECK(g.edge(0).cost == INT64_MAX);
        CHECK(g.edge(1).cost == INT64_MIN);
    }
}

TEST_CASE("neighbors lists incident edges in edge-id order") {
    SUBCASE("triangle") {
        Graph g = fixtures::triangle();
        CHECK(g.neighbors(0) == std::vector<std::pair<int, int>>{{0, 1}, {2, 2}});
    }
    SUBCASE("middle of a path") {
        Graph g = parse_graph("p 3 2\ne 0 1 1\ne 1 2 1");
        CHECK(g.neighbors(1) == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}});
    }
    SUBCASE("isolated node") {
        Graph g = parse_graph("p 2 0");
        CHECK(g.neighbors(1).empty());
    }
    SUBCASE("out of range") {
        Graph g = fixtures::triangle();
        CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
        CHECK_THROWS_AS(g.neighbors(-1), std::out_of_range);
    }
}

TEST_CASE("parallel edges are kept distinct") {
    Graph g = parse_graph("p 2 2\ne 0 1 5\ne 0 1 3");
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(0) == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
}

TEST_CASE("render/parse round-trips random graphs") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        int n = static_cast<int>(rng.uniform(1, 8));
        int m = n == 1 ? 0 : static_cast<int>(rng.uniform(n - 1, 2 * n));
        Graph g = n == 1 ? fixtures::single_node() : random_connected_graph(rng, n, m);
        CHECK(parse_graph(render_graph(g)) == g);
    }
}

TEST_CASE("incidence lists cover each edge twice") {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        int n = static_cast<int>(rng.uniform(2, 8));
        Graph g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 2 * n)));
        std::size_t total = 0;
        for (int node = 0; node < g.node_count(); ++node) {
            total += g.neighbors(node).size();
        }
        CHECK(total == 2 * static_cast<std::size_t>(g.edge_count()));
    }
}
