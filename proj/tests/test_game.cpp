#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sconn/gadgets.hpp"
#include "sconn/game.hpp"

using namespace sconn;

namespace {

int edge_between(const Graph& g, const char* u, const char* v) {
    int ui = g.find_vertex(u);
    for (int eid : g.out(ui))
        if (g.token(g.edge(eid).head) == v) return eid;
    REQUIRE(false);
    return -1;
}

GameState play(const Graph& g, RuleSet rules, std::initializer_list<std::pair<const char*, const char*>> moves) {
    GameState st = initial_state(g, rules);
    for (auto [u, v] : moves) st = apply_move(st, g, edge_between(g, u, v));
    return st;
}

} // namespace

TEST_CASE("initial_state fixes positions, turn and homebase visits") {
    Graph ex1 = gen_example(1);
    GameState st = initial_state(ex1, RuleSet{});
    CHECK(st.pos_a == ex1.s());
    CHECK(st.pos_b == ex1.t());
    CHECK(st.a_to_move);
    CHECK_FALSE(st.terminal());
    CHECK(st.path_a.size() == 1);
    CHECK(st.path_b.size() == 1);
    CHECK(st.visited_a.test((std::size_t)ex1.s()));
    CHECK(st.visited_b.test((std::size_t)ex1.t()));
}

TEST_CASE("s = t ends the game before any move") {
    Graph g = Graph::parse_instance("start s s\nedge s a 1\n");
    GameState st = initial_state(g, RuleSet{});
    CHECK(st.terminal());
    CHECK(st.meeting == g.s());
    CHECK(feasible(st, g, RuleSet{}));
    CHECK(feasibility_precheck(g, RuleSet{}));
}

TEST_CASE("raw_moves: example 1 start and sinks") {
    Graph ex1 = gen_example(1);
    GameState st = initial_state(ex1, RuleSet{});
    auto moves = raw_moves(st, ex1, RuleSet{});
    REQUIRE(moves.size() == 2);
    CHECK(ex1.token(ex1.edge(moves[0]).head) == "a");
    CHECK(ex1.token(ex1.edge(moves[1]).head) == "d");
    CHECK(moves[0] < moves[1]);

    // Vertex with no outgoing edges.
    Graph sink = Graph::parse_instance("start s t\nedge s t 1\nedge t u 1\nedge u v 1\n");
    GameState sk = initial_state(sink, RuleSet{});
    sk = apply_move(sk, sink, edge_between(sink, "s", "t")); // terminal actually
    CHECK(sk.terminal());
}

TEST_CASE("R2 blocks the used edge but not its antiparallel twin") {
    Graph g = Graph::parse_instance(
        "start x q\nedge x y 1\nedge y x 1\nedge q y 1\nedge q x 5\nedge y q 0\n");
    GameState st = initial_state(g, RuleSet{});
    st = apply_move(st, g, edge_between(g, "x", "y")); // A: x -> y
    st = apply_move(st, g, edge_between(g, "q", "x")); // B: q -> x (meets? x visited by A) ...
    CHECK(st.terminal());

    // Replay without the meeting: A goes x->y, B goes q->y meeting at y.
    GameState st2 = initial_state(g, RuleSet{});
    st2 = apply_move(st2, g, edge_between(g, "x", "y"));
    auto raw_b = raw_moves(st2, g, RuleSet{});
    CHECK(raw_b.size() == 2);

    // After A used (x,y), from y the same edge object is gone, the reverse stays.
    Graph two = Graph::parse_instance("start x z\nedge x y 0\nedge y x 0\nedge z w 0\nedge w y 0\n");
    GameState s3 = initial_state(two, RuleSet{});
    s3 = apply_move(s3, two, edge_between(two, "x", "y"));
    s3 = apply_move(s3, two, edge_between(two, "z", "w"));
    // A at y: raw moves contain y->x but not the used x->y.
    auto ms = raw_moves(s3, two, RuleSet{});
    REQUIRE(ms.size() == 1);
    CHECK(two.token(two.edge(ms[0]).head) == "x");
    // Under R3 even y->x is gone: x already visited by A.
    auto ms3 = raw_moves(s3, two, RuleSet{true});
    CHECK(ms3.empty());
}

TEST_CASE("feasibility: example 1 dead state and example 3 detour") {
    Graph ex1 = gen_example(1);
    // A: s,d,e and B: t,c,b -> A at e with no outgoing edge, A to move.
    GameState dead = play(ex1, RuleSet{}, {{"s", "d"}, {"t", "c"}, {"d", "e"}, {"c", "b"}});
    CHECK_FALSE(dead.terminal());
    CHECK(dead.a_to_move);
    CHECK_FALSE(feasible(dead, ex1, RuleSet{}));

    // Any terminal state is feasible.
    GameState done = play(ex1, RuleSet{}, {{"s", "d"}, {"t", "c"}, {"d", "b"}, {"c", "b"}});
    CHECK(done.terminal());
    CHECK(feasible(done, ex1, RuleSet{}));

    // Example 3 after B enters the v8 detour: A must avoid v3.
    Graph ex3 = gen_example(3, Cost(5));
    GameState mid = play(ex3, RuleSet{}, {{"s", "v1"}, {"t", "v6"}, {"v1", "v2"}, {"v6", "v8"}});
    CHECK(mid.a_to_move);
    auto raw = raw_moves(mid, ex3, RuleSet{});
    auto legal = legal_moves(mid, ex3, RuleSet{});
    auto has_head = [&](const std::vector<int>& moves, const char* v) {
        return std::any_of(moves.begin(), moves.end(), [&](int eid) {
            return ex3.token(ex3.edge(eid).head) == std::string(v);
        });
    };
    CHECK(has_head(raw, "v3"));
    CHECK(has_head(raw, "v4"));
    CHECK_FALSE(has_head(legal, "v3"));
    CHECK(has_head(legal, "v4"));
    GameState into_v3 = apply_move(mid, ex3, edge_between(ex3, "v2", "v3"));
    CHECK_FALSE(feasible(into_v3, ex3, RuleSet{}));
}

TEST_CASE("legal_moves is a subset of raw_moves and both at s are legal in example 1") {
    Graph ex1 = gen_example(1);
    GameState st = initial_state(ex1, RuleSet{});
    auto raw = raw_moves(st, ex1, RuleSet{});
    auto legal = legal_moves(st, ex1, RuleSet{});
    CHECK(legal == raw); // both (s,a) and (s,d) are legal
    for (int eid : legal) CHECK(std::find(raw.begin(), raw.end(), eid) != raw.end());
}

TEST_CASE("apply_move transitions and meeting detection") {
    Graph ex1 = gen_example(1);
    GameState st = play(ex1, RuleSet{}, {{"s", "d"}, {"t", "c"}});
    CHECK_FALSE(st.terminal());
    CHECK(st.a_to_move);
    CHECK(ex1.token(st.pos_a) == "d");
    CHECK(ex1.token(st.pos_b) == "c");

    // Moving onto the opponent's homebase ends the game: homebases count.
    Graph direct = Graph::parse_instance("start s t\nedge s x 1\nedge x t 1\nedge t u 0\nedge u x 0\n");
    GameState d1 = initial_state(direct, RuleSet{});
    d1 = apply_move(d1, direct, edge_between(direct, "s", "x"));
    d1 = apply_move(d1, direct, edge_between(direct, "t", "u"));
    d1 = apply_move(d1, direct, edge_between(direct, "x", "t"));
    CHECK(d1.terminal());
    CHECK(direct.token(d1.meeting) == "t");

    // Example 1 equilibrium play ends at e after B's c->e.
    GameState fin = play(ex1, RuleSet{}, {{"s", "d"}, {"t", "c"}, {"d", "b"}, {"c", "e"}, {"b", "e"}});
    CHECK(fin.terminal());
    CHECK(ex1.token(fin.meeting) == "e");
    CHECK(play_cost(std::span<const int>(fin.edges_a), ex1) == Cost(4));
    CHECK(play_cost(std::span<const int>(fin.edges_b), ex1) == Cost(5));

    CHECK_THROWS_AS(apply_move(fin, ex1, 0), InvalidInput);
}

TEST_CASE("play_cost on token walks") {
    Graph ex1 = gen_example(1);
    CHECK(play_cost({"s", "d", "b", "e"}, ex1) == Cost(4));
    CHECK(play_cost({"t", "c", "e"}, ex1) == Cost(5));
    CHECK(play_cost(std::vector<std::string>{}, ex1) == Cost(0));
    CHECK(play_cost({"s"}, ex1) == Cost(0));
    CHECK_THROWS_AS(play_cost({"s", "e"}, ex1), InvalidInput);
}

TEST_CASE("transcript format") {
    Graph ex1 = gen_example(1);
    GameState fin = play(ex1, RuleSet{}, {{"s", "d"}, {"t", "c"}, {"d", "b"}, {"c", "e"}, {"b", "e"}});
    std::string tr = format_transcript(fin, ex1);
    CHECK(tr.find("A s d") == 0);
    CHECK(tr.find("B t c") != std::string::npos);
    CHECK(tr.find("meet e 4 5") != std::string::npos);
}

TEST_CASE("feasible nonterminal states always offer a legal move") {
    Graph ex3 = gen_example(3, Cost(5));
    RuleSet rules{};
    FeasibilityOracle oracle(ex3, rules);
    // Walk a few plays and check the invariant along the way.
    GameState st = initial_state(ex3, rules);
    int steps = 0;
    while (!st.terminal() && steps++ < 2 * ex3.edge_count()) {
        auto legal = legal_moves(st, ex3, rules);
        REQUIRE(!legal.empty());
        st = apply_move(st, ex3, legal[0]);
        CHECK(feasible(st, ex3, rules));
    }
    CHECK((st.terminal() || steps <= 2 * ex3.edge_count()));

    // Cross-module consistency: precheck equals feasible(initial).
    for (int which : {1, 3}) {
        Graph g = gen_example(which, Cost(5));
        CHECK(feasibility_precheck(g, rules) == feasible(initial_state(g, rules), g, rules));
    }

    // Infeasible by construction: B cannot move on round 1.
    Graph stuck = Graph::parse_instance("start s t\nedge s x 1\n");
    CHECK_FALSE(feasibility_precheck(stuck, rules));
}
