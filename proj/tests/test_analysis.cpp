#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "sconn/analysis.hpp"
#include "sconn/gadgets.hpp"
#include "sconn/graph.hpp"

using namespace sconn;

namespace {

// Independent oracle: enumerate every simple cycle of the associated
// undirected multigraph (closed walks with distinct edges and distinct
// vertices; a parallel pair forms a 2-cycle) as a set of edge ids.
std::set<std::set<int>> enumerate_simple_cycles(const Graph& g) {
    std::set<std::set<int>> cycles;
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.tail].push_back({e.head, e.id});
        adj[e.head].push_back({e.tail, e.id});
    }

    std::vector<int> path_vertices;
    std::vector<int> path_edges;
    std::vector<char> on_path(n, 0);

    auto extend = [&](auto&& self, int start, int v) -> void {
        for (auto [w, eid] : adj[v]) {
            if (!path_edges.empty() && eid == path_edges.back()) continue;
            bool used = false;
            for (int pe : path_edges)
                if (pe == eid) used = true;
            if (used) continue;
            if (w == start && path_edges.size() >= 1) {
                std::set<int> cycle(path_edges.begin(), path_edges.end());
                cycle.insert(eid);
                if (cycle.size() >= 2) cycles.insert(cycle);
                continue;
            }
            if (on_path[w] || w == start) continue;
            on_path[w] = 1;
            path_vertices.push_back(w);
            path_edges.push_back(eid);
            self(self, start, w);
            path_edges.pop_back();
            path_vertices.pop_back();
            on_path[w] = 0;
        }
    };

    for (int v = 0; v < n; ++v) {
        path_vertices.clear();
        path_edges.clear();
        extend(extend, v, v);
    }
    return cycles;
}

bool cactus_by_enumeration(const Graph& g) {
    auto cycles = enumerate_simple_cycles(g);
    std::vector<int> count(g.edge_count(), 0);
    for (const auto& cycle : cycles)
        for (int eid : cycle) ++count[eid];
    for (int c : count)
        if (c > 1) return false;
    return true;
}

struct MiniRng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    std::uint64_t below(std::uint64_t b) { return next() % b; }
};

} // namespace

TEST_CASE("is_cactus on the spec shapes") {
    // Any tree.
    Graph tree = Graph::parse_instance("start s t\nedge s a 1\nedge a t 1\nedge a b 2\n");
    CHECK(is_cactus(tree));

    // Two triangles sharing one vertex.
    Graph shared = Graph::parse_instance(
        "start s t\nedge s a 0\nedge a b 0\nedge b s 0\nedge s c 0\nedge c t 0\nedge t s 0\n");
    CHECK(is_cactus(shared));

    // Example 1 is not a cactus: brute force shows an edge on two cycles.
    Graph ex1 = gen_example(1);
    CHECK_FALSE(cactus_by_enumeration(ex1));
    CHECK_FALSE(is_cactus(ex1));

    // Antiparallel pair = one 2-cycle: still a cactus.
    Graph two = Graph::parse_instance("start s t\nedge s t 1\nedge t s 1\n");
    CHECK(is_cactus(two));

    // Triple parallel edges put one pair in two cycles.
    Graph triple = Graph::parse_instance("start s t\nedge s t 1\nedge s t 1\nedge t s 1\n");
    CHECK_FALSE(is_cactus(triple));
}

TEST_CASE("is_cactus agrees with the cycle enumerator on random multigraphs") {
    MiniRng rng{12345};
    int cacti = 0, non = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + (int)rng.below(7);
        int m = 1 + (int)rng.below(10);
        std::vector<Graph::EdgeSpec> specs;
        for (int i = 0; i < m; ++i) {
            int u = (int)rng.below((std::uint64_t)n);
            int v = (int)rng.below((std::uint64_t)n);
            if (u == v) continue;
            specs.push_back({"n" + std::to_string(u), "n" + std::to_string(v), Cost(1)});
        }
        if (specs.empty()) continue;
        Graph g = Graph::build(specs, specs[0].tail, specs[0].head);
        bool expected = cactus_by_enumeration(g);
        CHECK(is_cactus(g) == expected);
        (expected ? cacti : non)++;
    }
    // The sample must exercise both outcomes.
    CHECK(cacti > 20);
    CHECK(non > 20);
}

TEST_CASE("is_dag and is_bipartite basics") {
    Graph tri = Graph::parse_instance("start a c\nedge a b 0\nedge b c 0\nedge c a 0\n");
    CHECK_FALSE(is_dag(tri));
    CHECK_FALSE(is_bipartite(tri));

    Graph chain = Graph::parse_instance("start a c\nedge a b 0\nedge b c 0\n");
    CHECK(is_dag(chain));
    CHECK(is_bipartite(chain));

    // Antiparallel pair: not a DAG but bipartite (even 2-cycle).
    Graph two = Graph::parse_instance("start s t\nedge s t 1\nedge t s 1\n");
    CHECK_FALSE(is_dag(two));
    CHECK(is_bipartite(two));
}

TEST_CASE("player_a_dag removes each directed cycle's closing edge") {
    // s->x plus the directed cycle x->y->z->x: the edge entering x goes.
    Graph g = Graph::parse_instance(
        "start s t\nedge s x 1\nedge x y 1\nedge y z 1\nedge z x 1\nedge x t 0\n");
    PlayerDag dag = player_a_dag(g);
    auto in = [&](const char* u, const char* v) {
        for (int eid : dag.edge_ids) {
            const Edge& e = g.edge(eid);
            if (g.token(e.tail) == u && g.token(e.head) == v) return true;
        }
        return false;
    };
    CHECK(in("s", "x"));
    CHECK(in("x", "y"));
    CHECK(in("y", "z"));
    CHECK_FALSE(in("z", "x"));
    CHECK(eprime_topological_order(g, dag).size() == dag.reachable.count());
}

TEST_CASE("player_a_dag keeps trees and filters unreachable edges") {
    Graph g = Graph::parse_instance(
        "start s t\nedge s a 1\nedge a b 1\nedge p q 1\nedge t a 1\n");
    PlayerDag dag = player_a_dag(g);
    CHECK(dag.edge_ids.size() == 2); // s->a, a->b; p->q and t->a unreachable
    for (int eid : dag.edge_ids) CHECK(dag.reachable.test((std::size_t)g.edge(eid).tail));
}

TEST_CASE("must_visit_sets matches the deletion oracle") {
    auto deletion_oracle = [](const Graph& g, const PlayerDag& dag, int a, int b) {
        // b in M(a) iff removing b disconnects a from s within E'.
        if (a == b) return true;
        if (b == g.s()) return true;
        std::vector<char> blocked(g.vertex_count(), 0);
        blocked[b] = 1;
        std::vector<int> stack{g.s()};
        std::vector<char> seen(g.vertex_count(), 0);
        if (b != g.s()) seen[g.s()] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == a) return false;
            for (int eid : g.out(v)) {
                if (!dag.in_eprime[eid]) continue;
                int w = g.edge(eid).head;
                if (seen[w] || blocked[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return true;
    };

    auto check_graph = [&](const Graph& g) {
        PlayerDag dag = player_a_dag(g);
        MustVisitSets mv = must_visit_sets(g, dag);
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (!mv.reachable.test(a)) continue;
            for (int b = 0; b < g.vertex_count(); ++b)
                CHECK(mv.contains(a, b) == deletion_oracle(g, dag, a, b));
        }
    };

    // Chain: M(y) = {s,x,y}.
    Graph chain = Graph::parse_instance("start s t\nedge s x 1\nedge x y 1\n");
    PlayerDag cd = player_a_dag(chain);
    MustVisitSets cm = must_visit_sets(chain, cd);
    int y = chain.find_vertex("y");
    CHECK(cm.contains(y, chain.find_vertex("s")));
    CHECK(cm.contains(y, chain.find_vertex("x")));
    CHECK(cm.contains(y, y));
    CHECK(cm.sets[(std::size_t)y].count() == 3);
    // M(s) = {s}.
    CHECK(cm.sets[(std::size_t)chain.s()].count() == 1);

    // Diamond: M(c) = {s,c}.
    Graph diamond =
        Graph::parse_instance("start s t\nedge s p 1\nedge s q 1\nedge p c 1\nedge q c 1\n");
    PlayerDag dd = player_a_dag(diamond);
    MustVisitSets dm = must_visit_sets(diamond, dd);
    int c = diamond.find_vertex("c");
    CHECK(dm.sets[(std::size_t)c].count() == 2);
    CHECK(dm.contains(c, diamond.s()));
    CHECK(dm.contains(c, c));

    check_graph(chain);
    check_graph(diamond);
    for (int seed = 1; seed <= 25; ++seed) check_graph(gen_random_cactus(10, (std::uint64_t)seed));
}

TEST_CASE("random cacti pass the validators") {
    for (int seed = 1; seed <= 20; ++seed) {
        Graph g = gen_random_cactus(12, (std::uint64_t)seed);
        CHECK(is_cactus(g));
        CHECK(cactus_by_enumeration(g));
        PlayerDag dag = player_a_dag(g);
        CHECK_NOTHROW(eprime_topological_order(g, dag));
    }
}
