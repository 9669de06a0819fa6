#include "sconn/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sconn {

namespace {

// Adjacency of the associated undirected multigraph: (neighbor, edge id).
std::vector<std::vector<std::pair<int, int>>> undirected_adjacency(const Graph& g,
                                                                   const std::vector<char>* mask) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (mask && !(*mask)[e.id]) continue;
        adj[e.tail].push_back({e.head, e.id});
        adj[e.head].push_back({e.tail, e.id});
    }
    return adj;
}

struct BccResult {
    std::vector<BiconnectedComponent> components;
};

// Iterative Hopcroft-Tarjan on the undirected multigraph. Parallel edges are
// distinct: the DFS skips only the single tree edge it arrived through, so a
// parallel twin counts as a back edge and yields a 2-cycle component.
BccResult compute_bccs(const Graph& g, const std::vector<char>* mask) {
    auto adj = undirected_adjacency(g, mask);
    int n = g.vertex_count();
    std::vector<int> depth(n, -1), low(n, 0);
    std::vector<char> edge_seen(g.edge_count(), 0);
    std::vector<int> edge_stack;
    BccResult result;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (depth[root] != -1 || adj[root].empty()) continue;
        std::vector<Frame> stack;
        depth[root] = 0;
        low[root] = 0;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, eid] = adj[f.v][f.next++];
                if (eid == f.parent_edge) continue;
                if (edge_seen[eid]) continue;
                edge_seen[eid] = 1;
                edge_stack.push_back(eid);
                if (depth[w] == -1) {
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    stack.push_back({w, eid, 0});
                } else {
                    low[f.v] = std::min(low[f.v], depth[w]);
                }
            } else {
                int v = f.v;
                int parent_edge = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= depth[u]) {
                    BiconnectedComponent comp;
                    while (true) {
                        int eid = edge_stack.back();
                        edge_stack.pop_back();
                        comp.edge_ids.push_back(eid);
                        if (eid == parent_edge) break;
                    }
                    std::vector<int> vs;
                    for (int eid : comp.edge_ids) {
                        vs.push_back(g.edge(eid).tail);
                        vs.push_back(g.edge(eid).head);
                    }
                    std::sort(vs.begin(), vs.end());
                    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                    comp.vertices = std::move(vs);
                    result.components.push_back(std::move(comp));
                }
            }
        }
    }
    return result;
}

} // namespace

bool is_cactus(const Graph& g) {
    auto bccs = compute_bccs(g, nullptr);
    for (const auto& c : bccs.components) {
        if (c.edge_ids.size() == 1) continue;
        if (c.edge_ids.size() != c.vertices.size()) return false;
    }
    return true;
}

bool is_dag(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const Edge& e : g.edges()) ++indeg[e.head];
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (int eid : g.out(v))
            if (--indeg[g.edge(eid).head] == 0) q.push_back(g.edge(eid).head);
    }
    return seen == n;
}

bool is_bipartite(const Graph& g) {
    auto adj = undirected_adjacency(g, nullptr);
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : adj[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != n - 1) return false;
    auto adj = undirected_adjacency(g, nullptr);
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, eid] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == n;
}

Bitset reachable_from(const Graph& g, int from) {
    Bitset r((std::size_t)g.vertex_count());
    std::deque<int> q{from};
    r.set(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int eid : g.out(v)) {
            int w = g.edge(eid).head;
            if (!r.test(w)) {
                r.set(w);
                q.push_back(w);
            }
        }
    }
    return r;
}

std::vector<BiconnectedComponent> biconnected_components(const Graph& g) {
    return compute_bccs(g, nullptr).components;
}

namespace {

// Orders a single-cycle component cyclically starting from `start`.
// Returns vertices v0=start, v1, ..., v_{k-1} and edge_ids[i] joining
// v_i and v_{i+1 mod k}.
void order_cycle(const Graph& g, const BiconnectedComponent& comp, int start,
                 std::vector<int>& vertices, std::vector<int>& edge_ids) {
    std::map<int, std::vector<std::pair<int, int>>> adj; // vertex -> (other, eid)
    for (int eid : comp.edge_ids) {
        const Edge& e = g.edge(eid);
        adj[e.tail].push_back({e.head, eid});
        adj[e.head].push_back({e.tail, eid});
    }
    vertices.clear();
    edge_ids.clear();
    int prev_edge = -1;
    int v = start;
    do {
        vertices.push_back(v);
        auto& cands = adj[v];
        // Exactly two incident cycle edges per vertex; pick the unused one,
        // preferring the smaller edge id on the first step.
        int chosen = -1;
        for (auto [w, eid] : cands)
            if (eid != prev_edge && (chosen == -1 || eid < chosen)) chosen = eid;
        const Edge& e = g.edge(chosen);
        int next = e.tail == v ? e.head : e.tail;
        edge_ids.push_back(chosen);
        prev_edge = chosen;
        v = next;
    } while (v != start);
}

} // namespace

PlayerDag player_a_dag(const Graph& g) {
    if (!is_cactus(g)) throw InvalidInput("not a cactus");

    PlayerDag dag;
    dag.reachable = reachable_from(g, g.s());
    dag.in_eprime.assign(g.edge_count(), 0);
    for (const Edge& e : g.edges())
        if (dag.reachable.test(e.tail)) dag.in_eprime[e.id] = 1;

    // Cactus cycles inside the reachable edge set.
    auto bccs = compute_bccs(g, &dag.in_eprime);
    for (const auto& comp : bccs.components) {
        if (comp.edge_ids.size() < 2) continue;

        // Entry vertex: the unique cycle vertex reachable from s without the
        // cycle's own edges.
        std::vector<char> allowed = dag.in_eprime;
        for (int eid : comp.edge_ids) allowed[eid] = 0;
        Bitset r((std::size_t)g.vertex_count());
        std::deque<int> q{g.s()};
        r.set(g.s());
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int eid : g.out(v)) {
                if (!allowed[eid]) continue;
                int w = g.edge(eid).head;
                if (!r.test(w)) {
                    r.set(w);
                    q.push_back(w);
                }
            }
        }
        int entry = -1;
        for (int v : comp.vertices) {
            if (!r.test(v)) continue;
            if (entry != -1) throw InvalidInput("not a cactus");
            entry = v;
        }
        if (entry == -1) throw InvalidInput("not a cactus");

        CactusCycle cycle;
        cycle.entry = entry;
        order_cycle(g, comp, entry, cycle.vertices, cycle.edge_ids);

        std::size_t k = cycle.vertices.size();
        bool forward = true, backward = true;
        for (std::size_t i = 0; i < k; ++i) {
            const Edge& e = g.edge(cycle.edge_ids[i]);
            int vi = cycle.vertices[i];
            int vnext = cycle.vertices[(i + 1) % k];
            if (!(e.tail == vi && e.head == vnext)) forward = false;
            if (!(e.tail == vnext && e.head == vi)) backward = false;
        }
        cycle.directed_cycle = forward || backward;

        const Edge& first = g.edge(cycle.edge_ids[0]);
        const Edge& last = g.edge(cycle.edge_ids[k - 1]);
        cycle.two_way_from_entry = first.tail == entry && last.tail == entry;

        if (cycle.directed_cycle) {
            // Drop the edge entering the entry vertex.
            for (int eid : cycle.edge_ids)
                if (g.edge(eid).head == entry) dag.in_eprime[eid] = 0;
        }
        dag.cycles.push_back(std::move(cycle));
    }

    for (int eid = 0; eid < g.edge_count(); ++eid)
        if (dag.in_eprime[eid]) dag.edge_ids.push_back(eid);
    return dag;
}

std::vector<int> eprime_topological_order(const Graph& g, const PlayerDag& dag) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (int eid : dag.edge_ids) ++indeg[g.edge(eid).head];
    std::deque<int> q;
    std::vector<char> in_scope(n, 0);
    for (int v = 0; v < n; ++v)
        if (dag.reachable.test(v)) in_scope[v] = 1;
    for (int v = 0; v < n; ++v)
        if (in_scope[v] && indeg[v] == 0) q.push_back(v);
    std::vector<int> order;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int eid : g.out(v)) {
            if (!dag.in_eprime[eid]) continue;
            if (--indeg[g.edge(eid).head] == 0) q.push_back(g.edge(eid).head);
        }
    }
    std::size_t expected = 0;
    for (int v = 0; v < n; ++v)
        if (in_scope[v]) ++expected;
    if (order.size() != expected) throw InvalidInput("edge set E' is not acyclic");
    return order;
}

MustVisitSets must_visit_sets(const Graph& g, const PlayerDag& dag) {
    int n = g.vertex_count();
    MustVisitSets mv;
    mv.reachable = Bitset((std::size_t)n);
    mv.sets.assign(n, Bitset());

    // Restrict to vertices reachable from s within E' itself.
    std::vector<std::vector<int>> preds(n);
    Bitset reach((std::size_t)n);
    reach.set(g.s());
    auto order = eprime_topological_order(g, dag);
    for (int v : order) {
        if (!reach.test(v)) continue;
        for (int eid : g.out(v)) {
            if (!dag.in_eprime[eid]) continue;
            reach.set(g.edge(eid).head);
        }
    }
    for (int eid : dag.edge_ids) {
        const Edge& e = g.edge(eid);
        if (reach.test(e.tail)) preds[e.head].push_back(e.tail);
    }

    for (int v : order) {
        if (!reach.test(v)) continue;
        Bitset m((std::size_t)n);
        if (v == g.s()) {
            m.set(v);
        } else {
            bool first = true;
            for (int u : preds[v]) {
                if (first) {
                    m = mv.sets[u];
                    first = false;
                } else {
                    m &= mv.sets[u];
                }
            }
            m.set(v);
        }
        mv.sets[v] = std::move(m);
        mv.reachable.set(v);
    }
    return mv;
}

} // namespace sconn
