#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcx/oracle.hpp"
#include "rcx/solver.hpp"
#include "test_util.hpp"

using namespace rcx;

namespace {

bool every_vertex_on_triangle(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        bool on = false;
        const auto& nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size() && !on; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !on; ++j)
                on = g.adjacent(nb[i], nb[j]);
        if (!on) return false;
    }
    return true;
}

int crx_value(const CrxOutcome& o) {
    REQUIRE(std::holds_alternative<CrxResult>(o));
    return std::get<CrxResult>(o).value;
}

}  // namespace

TEST_CASE("decide_crx1_le3 on K4 puts every vertex on a rainbow triangle") {
    const auto col = decide_crx1_le3(Graph::complete(4));
    REQUIRE(col.has_value());
    CHECK(col->colour_count() <= 3);
    CHECK(verify_k_rainbow(*col, 1).ok);
    for (int v = 0; v < 4; ++v) {
        const auto cyc = find_rainbow_cycle_through(*col, {v}, 3);
        REQUIRE(cyc.has_value());
        CHECK(cyc->length() == 3);
    }
}

TEST_CASE("decide_crx1_le3 refuses triangle-free graphs") {
    CHECK_FALSE(decide_crx1_le3(Graph::cycle(5)).has_value());
    CHECK_FALSE(decide_crx1_le3(Graph(2, {{0, 1}})).has_value());
    CHECK_FALSE(decide_crx1_le3(test::petersen()).has_value());
}

TEST_CASE("decide_crx1_le3 succeeds exactly when every vertex lies on a triangle") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < test::graph_mask_count(n); ++mask) {
            const Graph g = test::graph_from_mask(n, mask);
            const auto col = decide_crx1_le3(g);
            CHECK(col.has_value() == every_vertex_on_triangle(g));
            if (col) {
                CHECK(col->colour_count() <= 3);
                CHECK(verify_k_rainbow(*col, 1).ok);
            }
        }
    }
}

TEST_CASE("decide_crx1_le3 agrees with the brute-force oracle on small graphs") {
    test::Rng rng(3);
    int checked = 0;
    for (int it = 0; it < 50; ++it) {
        const int n = 4 + static_cast<int>(rng.next_below(3));
        const Graph g = Graph::random(n, 0.5, rng.next());
        const auto mine = decide_crx1_le3(g);
        const auto truth = oracle::crx_bruteforce(g, 1, 3);
        const bool oracle_le3 = std::holds_alternative<int>(truth);
        CHECK(mine.has_value() == oracle_le3);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("crx_exact known values on complete graphs") {
    for (int n = 3; n <= 6; ++n) {
        CHECK(crx_value(crx_exact(Graph::complete(n), 1)) == 3);
        CHECK(crx_value(crx_exact(Graph::complete(n), 2)) == 3);
    }
    CHECK(crx_value(crx_exact(Graph::complete(7), 1)) == 3);
    CHECK(crx_value(crx_exact(Graph::complete(7), 2)) == 3);  // ~7s: deep in the leaf order
}

TEST_CASE("crx_exact k=3 separates K4 from K5") {
    CHECK(crx_value(crx_exact(Graph::complete(4), 3)) == 3);
    const CrxOutcome r = crx_exact(Graph::complete(5), 3, 3);
    REQUIRE(std::holds_alternative<AboveCap>(r));
    CHECK(std::get<AboveCap>(r).cap == 3);
}

TEST_CASE("crx_exact of a cycle is its length") {
    for (int n = 3; n <= 7; ++n) CHECK(crx_value(crx_exact(Graph::cycle(n), 1)) == n);
}

TEST_CASE("crx_exact reports NotInFk with the first failing subset") {
    const CrxOutcome r = crx_exact(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 1);
    REQUIRE(std::holds_alternative<NotInFk>(r));
    CHECK(std::get<NotInFk>(r).witness_subset == std::vector<int>{0});
}

TEST_CASE("crx_exact witness passes verification with exactly the reported colours") {
    test::Rng rng(77);
    for (int it = 0; it < 25; ++it) {
        const int n = 4 + static_cast<int>(rng.next_below(2));
        const Graph g = Graph::random(n, 0.65, rng.next());
        for (int k = 1; k <= 2; ++k) {
            const CrxOutcome r = crx_exact(g, k, 6);
            if (const CrxResult* res = std::get_if<CrxResult>(&r)) {
                CHECK(res->method == CrxMethod::exact_search);
                CHECK(res->witness.colour_count() == res->value);
                CHECK(verify_k_rainbow(res->witness, k).ok);
            }
        }
    }
}

TEST_CASE("crx_exact value is monotone in k") {
    test::Rng rng(15);
    for (int n = 3; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < test::graph_mask_count(n); ++mask) {
            const Graph g = test::graph_from_mask(n, mask);
            std::optional<int> prev;
            for (int k = 1; k <= n; ++k) {
                const CrxOutcome r = crx_exact(g, k);
                if (const CrxResult* res = std::get_if<CrxResult>(&r)) {
                    if (prev) CHECK(*prev <= res->value);
                    prev = res->value;
                } else {
                    break;  // leaves the family: larger k only harder
                }
            }
        }
    for (int it = 0; it < 6; ++it) {
        const Graph g = Graph::random(5 + static_cast<int>(rng.next_below(2)), 0.7, rng.next());
        const CrxOutcome r1 = crx_exact(g, 1, 6);
        const CrxOutcome r2 = crx_exact(g, 2, 6);
        if (std::holds_alternative<CrxResult>(r1) && std::holds_alternative<CrxResult>(r2))
            CHECK(crx_value(r1) <= crx_value(r2));
    }
}

TEST_CASE("the inductive 3-colour construction verifies for k=2 and k=1") {
    for (int n = 3; n <= 9; ++n) {
        const EdgeColouring c = construct_2rainbow_complete(n);
        CHECK(c.colour_count() == 3);
        CHECK(c.max_colour() == 3);
        CHECK(verify_k_rainbow(c, 2).ok);
        CHECK(verify_k_rainbow(c, 1).ok);
    }
    CHECK_THROWS_AS(construct_2rainbow_complete(2), std::invalid_argument);
}

TEST_CASE("construction on K4: every pair lies on a rainbow triangle") {
    const EdgeColouring c = construct_2rainbow_complete(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const auto cyc = find_rainbow_cycle_through(c, {a, b}, 3);
            REQUIRE(cyc.has_value());
            CHECK(cyc->length() == 3);
        }
}

TEST_CASE("matching colouring of K4") {
    const EdgeColouring c = construct_3rainbow_k4();
    CHECK(c.colour_count() == 3);
    // three matching classes
    CHECK(c.colour(0, 1) == c.colour(2, 3));
    CHECK(c.colour(0, 2) == c.colour(1, 3));
    CHECK(c.colour(0, 3) == c.colour(1, 2));
    CHECK(verify_k_rainbow(c, 3).ok);
    // all four triangles rainbow
    for (const Cycle& t : cycles_through(c.host(), {}, 3)) CHECK(is_rainbow(c, t));
}

TEST_CASE("crx2=3 recognizer") {
    CHECK(recognize_crx2_eq3(Graph::complete(5)));
    CHECK(recognize_crx2_eq3(Graph::complete(3)));
    CHECK_FALSE(recognize_crx2_eq3(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));  // K4-e
    CHECK_FALSE(recognize_crx2_eq3(Graph::complete(2)));
    CHECK_FALSE(recognize_crx2_eq3(Graph::cycle(4)));
}

TEST_CASE("recognizers cross-checked against the exact solver") {
    for (int n = 3; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < test::graph_mask_count(n); ++mask) {
            const Graph g = test::graph_from_mask(n, mask);
            const CrxOutcome r2 = crx_exact(g, 2, 3);
            const bool eq3 = std::holds_alternative<CrxResult>(r2) && crx_value(r2) == 3;
            CHECK(eq3 == recognize_crx2_eq3(g));
            const CrxOutcome r3 = crx_exact(g, 3, 3);
            const bool eq3k3 = std::holds_alternative<CrxResult>(r3) && crx_value(r3) == 3;
            CHECK(eq3k3 == recognize_crx3_eq3(g));
        }
}

TEST_CASE("crx3=3 recognizer") {
    CHECK(recognize_crx3_eq3(Graph::complete(3)));
    CHECK(recognize_crx3_eq3(Graph::complete(4)));
    CHECK_FALSE(recognize_crx3_eq3(Graph::complete(5)));
    CHECK_FALSE(recognize_crx3_eq3(Graph::cycle(4)));
}

TEST_CASE("ramsey_upper_bound") {
    CHECK(ramsey_upper_bound(1) == 3);
    CHECK(ramsey_upper_bound(2) == 6);
    CHECK(ramsey_upper_bound(3) == 17);
    CHECK(ramsey_upper_bound(4) == 66);
    CHECK_THROWS_AS(ramsey_upper_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_upper_bound(21), std::out_of_range);
}

TEST_CASE("two colours force a monochromatic triangle at order 6 but not 5") {
    // K5 has a triangle-free 2-colouring...
    bool witness_found = false;
    const Graph k5 = Graph::complete(5);
    for (std::uint64_t mask = 0; mask < (1u << 10) && !witness_found; ++mask) {
        std::vector<int> cols(10);
        for (int e = 0; e < 10; ++e) cols[e] = 1 + (mask >> e & 1);
        witness_found = !find_monochromatic_triangle(EdgeColouring(k5, cols)).has_value();
    }
    CHECK(witness_found);

    // ...and K6 does not: exhaust all 2^15 colourings.
    const Graph k6 = Graph::complete(6);
    bool all_have_triangle = true;
    for (std::uint64_t mask = 0; mask < (1u << 15) && all_have_triangle; ++mask) {
        std::vector<int> cols(15);
        for (int e = 0; e < 15; ++e) cols[e] = 1 + (mask >> e & 1);
        all_have_triangle = find_monochromatic_triangle(EdgeColouring(k6, cols)).has_value();
    }
    CHECK(all_have_triangle);
}

TEST_CASE("find_monochromatic_triangle basics") {
    CHECK_FALSE(find_monochromatic_triangle(EdgeColouring(Graph::complete(3), {1, 2, 3}))
                    .has_value());
    const auto t = find_monochromatic_triangle(EdgeColouring(Graph::complete(3), {4, 4, 4}));
    REQUIRE(t.has_value());
    CHECK(t->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("order shortcut for crx3 > 4") {
    CHECK(crx3_gt4_by_order(Graph(66, {})));
    CHECK_FALSE(crx3_gt4_by_order(Graph(65, {})));
    CHECK_FALSE(crx3_gt4_by_order(Graph::complete(4)));
}

TEST_CASE("solver matches the brute-force oracle on small graphs") {
    for (int n = 3; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < test::graph_mask_count(n); ++mask) {
            const Graph g = test::graph_from_mask(n, mask);
            for (int k = 1; k <= 2; ++k) {
                const CrxOutcome mine = crx_exact(g, k, 5);
                const oracle::CrxBruteResult truth = oracle::crx_bruteforce(g, k, 5);
                if (const int* v = std::get_if<int>(&truth)) {
                    CHECK(crx_value(mine) == *v);
                } else if (std::holds_alternative<oracle::NotInFk>(truth)) {
                    CHECK(std::holds_alternative<NotInFk>(mine));
                } else {
                    CHECK(std::holds_alternative<AboveCap>(mine));
                }
            }
        }
}
