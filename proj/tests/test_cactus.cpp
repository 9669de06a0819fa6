#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "sconn/cactus.hpp"
#include "sconn/gadgets.hpp"
#include "sconn/solver.hpp"

using namespace sconn;

namespace {

void check_against_exact(const Graph& g, const std::string& label) {
    RuleSet r3{true};
    auto exact = solve_exact(g, r3);
    auto dp = solve_cactus_r3(g);
    INFO(label, "; instance:\n", g.serialize());
    CHECK(dp.cost_a == exact.cost_a);
    CHECK(dp.cost_b == exact.cost_b);
    CHECK(dp.meeting == exact.meeting);
    // Replaying the DP paths reproduces the reported costs.
    CHECK(play_cost(dp.path_a_tokens(g), g) == dp.cost_a);
    CHECK(play_cost(dp.path_b_tokens(g), g) == dp.cost_b);
}

} // namespace

TEST_CASE("star: the single forced play") {
    Graph g = Graph::parse_instance("rules r3\nstart s t\nedge s m 3\nedge t m 5\n");
    auto eq = solve_cactus_r3(g);
    CHECK(eq.cost_a == Cost(3));
    CHECK(eq.cost_b == Cost(5));
    CHECK(g.token(eq.meeting) == "m");
}

TEST_CASE("A overshoots while B arrives: (2,1)") {
    Graph g = Graph::parse_instance(
        "rules r3\nstart s t\nedge s x 1\nedge x m 1\nedge t m 1\n");
    auto eq = solve_cactus_r3(g);
    CHECK(eq.cost_a == Cost(2));
    CHECK(eq.cost_b == Cost(1));
    CHECK(g.token(eq.meeting) == "m");
    check_against_exact(g, "overshoot path");
}

TEST_CASE("role_swap_needed detection") {
    // Pure directed tree: no cycles at all.
    Graph tree = Graph::parse_instance("start s t\nedge s a 1\nedge t a 1\nedge a b 1\n");
    CHECK_FALSE(role_swap_needed(tree));

    // Every cycle uniformly directed: never two-way from the entry.
    Graph ring = Graph::parse_instance(
        "start s t\nedge s x 1\nedge x y 1\nedge y z 1\nedge z x 1\nedge t y 0\n");
    CHECK_FALSE(role_swap_needed(ring));

    // Two-way diamond on A's side with B able to reach a branch vertex.
    Graph diamond = Graph::parse_instance(
        "start s t\nedge s p 1\nedge s q 2\nedge p c 1\nedge q c 2\nedge t p 1\n");
    CHECK(role_swap_needed(diamond));

    // Same diamond but B can only reach it through the entry: no swap.
    Graph through = Graph::parse_instance(
        "start s t\nedge s p 1\nedge s q 2\nedge p c 1\nedge q c 2\nedge t s 1\n");
    CHECK_FALSE(role_swap_needed(through));
}

TEST_CASE("role-swapped instances still match the exact solver") {
    Graph diamond = Graph::parse_instance(
        "rules r3\nstart s t\nedge s p 1\nedge s q 2\nedge p c 1\nedge q c 2\nedge t p 1\n");
    REQUIRE(role_swap_needed(diamond));
    auto full = solve_cactus_r3_full(diamond);
    CHECK(full.role_swapped);
    check_against_exact(diamond, "swapped diamond");
}

TEST_CASE("dp equals exact on seeded random cacti") {
    for (int seed = 1; seed <= 80; ++seed) {
        int n = 3 + seed % 10;
        Graph g = gen_random_cactus(n, (std::uint64_t)seed);
        check_against_exact(g, "random cactus seed " + std::to_string(seed));
    }
}

TEST_CASE("infeasible cactus reports no feasible play") {
    Graph g = Graph::parse_instance("rules r3\nstart s t\nedge s a 1\nedge t b 1\nedge b c 1\n");
    CHECK_THROWS_AS(solve_cactus_r3(g), Infeasible);
}

TEST_CASE("non-cactus input is rejected") {
    Graph ex1 = gen_example(1);
    CHECK_THROWS_WITH_AS(solve_cactus_r3(ex1), "not a cactus", InvalidInput);
}

TEST_CASE("table dump has the root row and matches the result") {
    Graph g = Graph::parse_instance("rules r3\nstart s t\nedge s m 3\nedge t m 5\n");
    CactusOptions opts;
    opts.want_tables = true;
    auto full = solve_cactus_r3_full(g, opts);
    REQUIRE(!full.table_dump.empty());
    bool found_root = false;
    for (const auto& line : full.table_dump) {
        CHECK(line.rfind("cost ", 0) == 0);
        if (line.rfind("cost s t ", 0) == 0) {
            found_root = true;
            CHECK(line == "cost s t 3 5");
        }
    }
    CHECK(found_root);
}

TEST_CASE("cost entries are infinite in both components or neither") {
    Graph g = gen_random_cactus(9, 5);
    CactusOptions opts;
    opts.want_tables = true;
    auto full = solve_cactus_r3_full(g, opts);
    for (const auto& line : full.table_dump) {
        // "cost <a> <b> <x> <y>": x == "inf" iff y == "inf"
        std::istringstream is(line);
        std::string w, a, b, x, y;
        is >> w >> a >> b >> x >> y;
        CHECK((x == "inf") == (y == "inf"));
    }
}

TEST_CASE("dispatcher: tree beats cactus beats exact") {
    Graph tree = Graph::parse_instance("rules r3\nstart s t\nedge s m 1\nedge t m 1\n");
    CHECK(solve_dispatch(tree, RuleSet{true}, Engine::kAuto).used == Engine::kTree);
    Graph ring = Graph::parse_instance(
        "rules r3\nstart s t\nedge s x 1\nedge x y 1\nedge y x 0\nedge t y 1\n");
    CHECK(solve_dispatch(ring, RuleSet{true}, Engine::kAuto).used == Engine::kCactus);
    CHECK(solve_dispatch(ring, RuleSet{false}, Engine::kAuto).used == Engine::kExact);
    Graph ex1 = gen_example(1);
    CHECK(solve_dispatch(ex1, RuleSet{true}, Engine::kAuto).used == Engine::kExact);
}
