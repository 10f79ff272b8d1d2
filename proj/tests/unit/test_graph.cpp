#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rcx/graph.hpp"
#include "rcx/io.hpp"
#include "test_util.hpp"

using namespace rcx;

TEST_CASE("parse_graph reads the documented format") {
    const Graph g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.is_complete());

    const Graph empty = parse_graph("p 2 0\n");
    CHECK(empty.order() == 2);
    CHECK(empty.edge_count() == 0);

    const Graph commented = parse_graph("# a triangle\np 3 3\ne 1 2\n# middle\ne 2 3\ne 1 3\n");
    CHECK(commented == g);
}

TEST_CASE("parse_graph rejects malformed input with distinct error kinds") {
    const auto kind_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("expected a parse error");
        return ParseErrorKind::malformed_header;
    };
    CHECK(kind_of("q 3 3\n") == ParseErrorKind::malformed_header);
    CHECK(kind_of("p 3\n") == ParseErrorKind::malformed_header);
    CHECK(kind_of("p 2 1\ne 1 1\n") == ParseErrorKind::self_loop);
    CHECK(kind_of("p 2 1\ne 1 5\n") == ParseErrorKind::endpoint_out_of_range);
    CHECK(kind_of("p 2 2\ne 1 2\ne 2 1\n") == ParseErrorKind::duplicate_edge);
    CHECK(kind_of("p 3 2\ne 1 2\n") == ParseErrorKind::malformed_line);
    CHECK(kind_of("p 3 1\ne 1 2\ne 2 3\n") == ParseErrorKind::malformed_line);
}

TEST_CASE("write_graph emits sorted edges, bit-exact") {
    Graph g(3, {{2, 1}, {0, 2}, {0, 1}});
    CHECK(write_graph(g) == "p 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("parse after write is the identity") {
    test::Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        const int n = 1 + static_cast<int>(rng.next_below(9));
        const Graph g = Graph::random(n, 0.4, rng.next());
        CHECK(parse_graph(write_graph(g)) == g);
    }
}

TEST_CASE("generators") {
    CHECK(Graph::complete(4).edge_count() == 6);
    CHECK(Graph::cycle(5).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::complete(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph::random(3, 1.5, 0), std::invalid_argument);

    // determinism per (n,p,seed); edge cases p=0 and p=1
    CHECK(Graph::random(5, 0.5, 77) == Graph::random(5, 0.5, 77));
    CHECK(Graph::random(6, 0.0, 3).edge_count() == 0);
    CHECK(Graph::random(6, 1.0, 3).is_complete());
}

TEST_CASE("graph construction invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("cycle enumeration basics") {
    CHECK(cycles_through(Graph::cycle(5), {0}, {}).size() == 1);
    CHECK(cycles_through(Graph::complete(4), {0, 1}, 3).size() == 2);
    CHECK(cycles_through(Graph::complete(4), {}, {}).size() == 7);
    CHECK(cycles_through(Graph(3, {{0, 1}, {1, 2}}), {1}, {}).empty());

    // max_len honoured
    for (const Cycle& c : cycles_through(Graph::complete(5), {}, 4))
        CHECK(c.length() <= 4);
}

TEST_CASE("enumeration yields each cycle once, in canonical form") {
    test::Rng rng(5);
    for (int it = 0; it < 10; ++it) {
        const int n = 4 + static_cast<int>(rng.next_below(4));
        const Graph g = Graph::random(n, 0.55, rng.next());
        std::set<std::vector<int>> seen;
        for (const Cycle& c : cycles_through(g, {}, {})) {
            CHECK(canonical_cycle(c.vertices).vertices == c.vertices);
            CHECK(seen.insert(c.vertices).second);
        }
    }
}

TEST_CASE("cycle counts match an independent brute force") {
    CHECK(cycles_through(Graph::complete(5), {}, {}).size() ==
          test::brute_force_cycle_count(Graph::complete(5)));
    CHECK(cycles_through(Graph::cycle(6), {}, {}).size() ==
          test::brute_force_cycle_count(Graph::cycle(6)));
    CHECK(cycles_through(Graph::cycle(7), {}, {}).size() == 1);
    test::Rng rng(21);
    for (int it = 0; it < 8; ++it) {
        const int n = 6 + static_cast<int>(rng.next_below(2));
        const Graph g = Graph::random(n, 0.5, rng.next());
        CHECK(cycles_through(g, {}, {}).size() == test::brute_force_cycle_count(g));
        CHECK(cycles_through(g, {}, 4).size() == test::brute_force_cycle_count(g, 4));
    }
}

TEST_CASE("anchored enumeration agrees with filtering the full enumeration") {
    test::Rng rng(9);
    for (int it = 0; it < 12; ++it) {
        const int n = 5 + static_cast<int>(rng.next_below(3));
        const Graph g = Graph::random(n, 0.5, rng.next());
        const int a = static_cast<int>(rng.next_below(n));
        int b = static_cast<int>(rng.next_below(n));
        if (b == a) b = (b + 1) % n;
        std::set<std::vector<int>> expected;
        for (const Cycle& c : cycles_through(g, {}, {})) {
            bool has_a = false, has_b = false;
            for (int v : c.vertices) {
                has_a |= v == a;
                has_b |= v == b;
            }
            if (has_a && has_b) expected.insert(c.vertices);
        }
        std::set<std::vector<int>> got;
        for (const Cycle& c : cycles_through(g, {a, b}, {})) got.insert(c.vertices);
        CHECK(got == expected);
    }
}

TEST_CASE("shortest_cycle_through") {
    const Graph g = Graph::cycle(6);
    auto c = shortest_cycle_through(g, {0, 3});
    REQUIRE(c.has_value());
    CHECK(c->length() == 6);
    CHECK_FALSE(shortest_cycle_through(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), {1}).has_value());
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(Graph::cycle(6)) == 2);
    CHECK(vertex_connectivity(Graph(3, {{0, 1}, {1, 2}})) == 1);
    CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(vertex_connectivity(Graph(1, {})) == 0);
    CHECK(vertex_connectivity(Graph::complete(2)) == 1);
    CHECK(vertex_connectivity(test::petersen()) == 3);
    // star: removing the centre disconnects
    CHECK(vertex_connectivity(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 1);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph::cycle(4)));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST_CASE("family membership examples") {
    const FkEvidence a = check_fk_membership(Graph::cycle(5), 5, FkMode::exact);
    CHECK(a.verdict == FkVerdict::exact_yes);
    CHECK(a.witness->length() == 5);

    const FkEvidence b = check_fk_membership(Graph(3, {{0, 1}, {1, 2}}), 1, FkMode::exact);
    CHECK(b.verdict == FkVerdict::exact_no);
    CHECK(b.subset == std::vector<int>{0});

    const FkEvidence c = check_fk_membership(Graph::complete(4), 3, FkMode::fast);
    CHECK(c.verdict == FkVerdict::sufficient_k_connected);
    CHECK(c.connectivity == 3);

    // fast with k=1 must not use the connectivity shortcut
    const FkEvidence d = check_fk_membership(Graph::cycle(4), 1, FkMode::fast);
    CHECK(d.verdict == FkVerdict::exact_yes);
}

TEST_CASE("fast mode never contradicts exact mode") {
    for (int n = 3; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < test::graph_mask_count(n); ++mask) {
            const Graph g = test::graph_from_mask(n, mask);
            for (int k = 1; k <= 3; ++k) {
                const FkEvidence fast = check_fk_membership(g, k, FkMode::fast);
                if (fast.verdict == FkVerdict::sufficient_k_connected) {
                    const FkEvidence exact = check_fk_membership(g, k, FkMode::exact);
                    CHECK(exact.verdict == FkVerdict::exact_yes);
                }
            }
        }
    }
    test::Rng rng(33);
    for (int it = 0; it < 30; ++it) {
        const int n = 6 + static_cast<int>(rng.next_below(2));
        const Graph g = Graph::random(n, 0.55, rng.next());
        for (int k = 2; k <= 3; ++k) {
            const FkEvidence fast = check_fk_membership(g, k, FkMode::fast);
            if (fast.verdict == FkVerdict::sufficient_k_connected)
                CHECK(check_fk_membership(g, k, FkMode::exact).verdict == FkVerdict::exact_yes);
        }
    }
}

TEST_CASE("worst-subset evidence pins the longest shortest cover") {
    // In C6 every pair of antipodal vertices needs the full 6-cycle.
    const FkEvidence e = check_fk_membership(Graph::cycle(6), 2, FkMode::exact);
    CHECK(e.verdict == FkVerdict::exact_yes);
    CHECK(e.subset == std::vector<int>{0, 1});  // every pair needs the whole cycle
    CHECK(e.witness->length() == 6);
}
