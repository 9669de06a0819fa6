#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "sconn/cactus.hpp"
#include "sconn/gadgets.hpp"
#include "sconn/solver.hpp"

using namespace sconn;

TEST_CASE("forced star meeting") {
    Graph g = Graph::parse_instance("start s t\nedge s m 2\nedge t m 7\n");
    auto eq = solve_tree(g);
    CHECK(eq.cost_a == Cost(2));
    CHECK(eq.cost_b == Cost(7));
    CHECK(g.token(eq.meeting) == "m");
}

TEST_CASE("A arrives early and overshoots at zero cost") {
    Graph g = Graph::parse_instance(
        "start s t\nedge s m 1\nedge m w 0\nedge t x 1\nedge x m 1\n");
    auto eq = solve_tree(g);
    CHECK(eq.cost_a == Cost(1));
    CHECK(eq.cost_b == Cost(2));
    CHECK(g.token(eq.meeting) == "m");
    CHECK(eq.path_a_tokens(g) == std::vector<std::string>{"s", "m", "w"});
}

TEST_CASE("the overshoot walk picks the cheapest branch of the right length") {
    Graph g = Graph::parse_instance(
        "start s t\n"
        "edge s m 1\n"
        "edge m w 5\nedge m u 2\nedge u u2 3\n"
        "edge t x 1\nedge x m 1\n");
    // A needs exactly one extra move: w costs 5, u costs 2.
    auto eq = solve_tree(g);
    CHECK(eq.cost_a == Cost(3));
    CHECK(eq.path_a_tokens(g) == std::vector<std::string>{"s", "m", "u"});

    // Two extra moves force the u,u2 branch even though w alone is an option.
    Graph h = Graph::parse_instance(
        "start s t\n"
        "edge s m 1\n"
        "edge m w 0\nedge m u 2\nedge u u2 3\n"
        "edge t x0 1\nedge x0 x 1\nedge x m 1\n");
    auto e2 = solve_tree(h);
    CHECK(e2.cost_a == Cost(1 + 2 + 3));
    CHECK(e2.cost_b == Cost(3));
}

TEST_CASE("B arrives early and overshoots") {
    // Spine of length 3 toward m = p2; B lands first and must burn one move.
    Graph g = Graph::parse_instance(
        "start s t\n"
        "edge s p1 1\nedge p1 p2 1\nedge p2 p3 0\n"
        "edge t p2 4\nedge t junk 9\n");
    // s -> p1 -> p2 is forward, t -> p2 backward; dist_a = 2, dist_b = 1.
    // B overshoots dist_a - dist_b - 1 = 0 moves.
    auto eq = solve_tree(g);
    CHECK(eq.cost_a == Cost(2));
    CHECK(eq.cost_b == Cost(4));

    // Lengthen A's side: now B burns one move beyond m.
    Graph h = Graph::parse_instance(
        "start s t\n"
        "edge s p0 1\nedge p0 p1 1\nedge p1 p2 1\nedge p2 p3 0\n"
        "edge t p2 4\n");
    auto e2 = solve_tree(h);
    CHECK(e2.cost_a == Cost(3));
    CHECK(e2.cost_b == Cost(4));
    CHECK(e2.path_b_tokens(h) == std::vector<std::string>{"t", "p2", "p3"});
}

TEST_CASE("infeasible trees") {
    // Spine broken: an edge points away from the meeting region on B's side.
    Graph g = Graph::parse_instance("start s t\nedge s m 1\nedge x m 1\nedge x t 1\n");
    CHECK_THROWS_AS(solve_tree(g), Infeasible);
    // A cannot survive the overshoot.
    Graph h = Graph::parse_instance("start s t\nedge s m 1\nedge t x 1\nedge x m 1\n");
    CHECK_THROWS_AS(solve_tree(h), Infeasible);
}

TEST_CASE("not a tree is rejected") {
    CHECK_THROWS_WITH_AS(solve_tree(gen_example(1)), "not a tree", InvalidInput);
    Graph two = Graph::parse_instance("start s t\nedge s t 1\nedge t s 1\n");
    CHECK_THROWS_WITH_AS(solve_tree(two), "not a tree", InvalidInput);
}

TEST_CASE("s equals t") {
    Graph g = Graph::parse_instance("start s s\nedge s a 1\n");
    auto eq = solve_tree(g);
    CHECK(eq.cost_a == Cost(0));
    CHECK(eq.cost_b == Cost(0));
    CHECK(eq.meeting == g.s());
}

TEST_CASE("tree solver equals exact search on seeded random trees") {
    RuleSet r3{true};
    for (int seed = 1; seed <= 60; ++seed) {
        int n = 3 + seed % 13;
        Graph g = gen_random_tree(n, (std::uint64_t)seed);
        auto exact = solve_exact(g, r3);
        auto tree = solve_tree(g);
        INFO("seed ", seed, "; instance:\n", g.serialize());
        CHECK(tree.cost_a == exact.cost_a);
        CHECK(tree.cost_b == exact.cost_b);
        CHECK(tree.meeting == exact.meeting);
    }
}

TEST_CASE("tree solver equals the cactus DP on trees") {
    for (int seed = 1; seed <= 25; ++seed) {
        Graph g = gen_random_tree(10, (std::uint64_t)seed);
        auto tree = solve_tree(g);
        auto dp = solve_cactus_r3(g);
        INFO("seed ", seed);
        CHECK(tree.cost_a == dp.cost_a);
        CHECK(tree.cost_b == dp.cost_b);
        CHECK(tree.meeting == dp.meeting);
    }
}
