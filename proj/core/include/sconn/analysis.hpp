#pragma once

#include <vector>

#include "sconn/bitset.hpp"
#include "sconn/graph.hpp"

namespace sconn {

// Structural analyses on the associated undirected multigraph (orientation
// dropped; antiparallel or parallel directed edges become parallel undirected
// edges and thus 2-cycles) and on the directed graph itself.

// True iff every edge lies on at most one simple cycle, equivalently every
// biconnected component is a single edge or a single cycle.
bool is_cactus(const Graph& g);

// Standard directed acyclicity test.
bool is_dag(const Graph& g);

// 2-colorability of the associated undirected multigraph. A parallel pair
// forms an (even) 2-cycle and does not obstruct bipartiteness.
bool is_bipartite(const Graph& g);

// Connected undirected multigraph with no cycle at all.
bool is_tree(const Graph& g);

// Vertices reachable from `from` along directed edges (including `from`).
Bitset reachable_from(const Graph& g, int from);

// One biconnected component of the undirected view: the edge ids it contains.
struct BiconnectedComponent {
    std::vector<int> edge_ids;
    std::vector<int> vertices;
};
std::vector<BiconnectedComponent> biconnected_components(const Graph& g);

// A cycle of the cactus lying inside player A's reachable region.
struct CactusCycle {
    std::vector<int> vertices;       // in cyclic order starting at entry
    std::vector<int> edge_ids;       // edge_ids[i] joins vertices[i], vertices[i+1 mod k]
    int entry;                       // the unique vertex through which A first reaches it
    bool directed_cycle;             // edges consistently oriented around the cycle
    bool two_way_from_entry;         // entry has outgoing cycle edges in both directions
};

// Player A's acyclic edge set E': edges whose tail is reachable from s, with
// the closing edge of every directed cycle (the edge entering the cycle's
// entry vertex) removed.
struct PlayerDag {
    std::vector<char> in_eprime;     // by edge id
    std::vector<int> edge_ids;       // ascending
    std::vector<CactusCycle> cycles; // all reachable cactus cycles, pre-removal
    Bitset reachable;                // vertices reachable from s
};
PlayerDag player_a_dag(const Graph& g);

// M(a): the vertices contained in every directed E'-path from s to a,
// including a itself (dominators of a with respect to source s).
// Vertices unreachable in E' carry an empty set and reachable(a) = false.
struct MustVisitSets {
    std::vector<Bitset> sets;        // indexed by vertex
    Bitset reachable;
    bool contains(int a, int b) const { return reachable.test(a) && sets[a].test(b); }
};
MustVisitSets must_visit_sets(const Graph& g, const PlayerDag& dag);

// Topological order of E' restricted to reachable vertices; throws
// InvalidInput when E' is not acyclic (cannot happen for a cactus).
std::vector<int> eprime_topological_order(const Graph& g, const PlayerDag& dag);

} // namespace sconn
