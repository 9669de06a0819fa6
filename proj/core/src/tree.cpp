#include "sconn/cactus.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sconn {

namespace {

// Minimum-cost directed walk of exactly `length` edges starting at v.
// On a tree every such walk is automatically simple and never re-enters the
// spine, so no exclusions are needed. Returns the edge sequence, or nothing.
struct WalkFinder {
    const Graph& g;
    std::map<std::pair<int, int>, std::pair<bool, Cost>> memo;

    std::pair<bool, Cost> best(int v, int length) {
        if (length == 0) return {true, Cost()};
        auto key = std::make_pair(v, length);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool found = false;
        Cost best_cost;
        for (int eid : g.out(v)) {
            const Edge& e = g.edge(eid);
            auto [ok, sub] = best(e.head, length - 1);
            if (!ok) continue;
            Cost total = e.cost + sub;
            if (!found || total < best_cost) {
                found = true;
                best_cost = total;
            }
        }
        auto result = std::make_pair(found, best_cost);
        memo[key] = result;
        return result;
    }

    // Lexicographically smallest-edge-id optimal walk, appended to out.
    void reconstruct(int v, int length, std::vector<int>& out) {
        if (length == 0) return;
        Cost target = best(v, length).second;
        for (int eid : g.out(v)) {
            const Edge& e = g.edge(eid);
            auto [ok, sub] = best(e.head, length - 1);
            if (!ok || e.cost + sub != target) continue;
            out.push_back(eid);
            reconstruct(e.head, length - 1, out);
            return;
        }
        throw std::logic_error("overshoot walk reconstruction failed");
    }
};

} // namespace

Equilibrium solve_tree(const Graph& g) {
    if (!is_tree(g)) throw InvalidInput("not a tree");

    Equilibrium eq;
    if (g.s() == g.t()) {
        eq.meeting = g.s();
        eq.path_a = {g.s()};
        eq.path_b = {g.t()};
        return eq;
    }

    // Unique undirected s-t path.
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.tail].push_back({e.head, e.id});
        adj[e.head].push_back({e.tail, e.id});
    }
    std::vector<int> parent(n, -1), parent_edge(n, -1);
    std::deque<int> q{g.s()};
    std::vector<char> seen(n, 0);
    seen[g.s()] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, eid] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent[w] = v;
            parent_edge[w] = eid;
            q.push_back(w);
        }
    }
    if (!seen[g.t()]) throw Infeasible();

    std::vector<int> path{g.t()};
    std::vector<int> path_edges;
    for (int v = g.t(); v != g.s(); v = parent[v]) {
        path_edges.push_back(parent_edge[v]);
        path.push_back(parent[v]);
    }
    std::reverse(path.begin(), path.end());
    std::reverse(path_edges.begin(), path_edges.end());
    int k = (int)path_edges.size();

    // The meeting vertex is the end of the maximal forward-oriented prefix;
    // the remaining spine edges must all point backward or no play exists.
    int fa = 0;
    while (fa < k) {
        const Edge& e = g.edge(path_edges[fa]);
        if (e.tail == path[fa] && e.head == path[fa + 1]) ++fa;
        else break;
    }
    for (int i = fa; i < k; ++i) {
        const Edge& e = g.edge(path_edges[i]);
        if (!(e.tail == path[i + 1] && e.head == path[i])) throw Infeasible();
    }

    int m = path[fa];
    int dist_a = fa;
    int dist_b = k - fa;

    for (int i = 0; i < fa; ++i) eq.cost_a += g.edge(path_edges[i]).cost;
    for (int i = fa; i < k; ++i) eq.cost_b += g.edge(path_edges[i]).cost;
    eq.path_a.assign(path.begin(), path.begin() + fa + 1);
    eq.edges_a.assign(path_edges.begin(), path_edges.begin() + fa);
    eq.path_b.assign(path.rbegin(), path.rbegin() + (k - fa) + 1);
    eq.edges_b.assign(path_edges.rbegin(), path_edges.rbegin() + (k - fa));
    eq.meeting = m;

    // The early arriver keeps moving beyond m until the other lands on it.
    int overshoot_a = dist_b > dist_a ? dist_b - dist_a : 0;
    int overshoot_b = dist_a > dist_b ? dist_a - dist_b - 1 : 0;
    if (overshoot_a > 0 || overshoot_b > 0) {
        WalkFinder finder{g, {}};
        int len = overshoot_a > 0 ? overshoot_a : overshoot_b;
        auto [ok, cost] = finder.best(m, len);
        if (!ok) throw Infeasible();
        std::vector<int> walk;
        finder.reconstruct(m, len, walk);
        if (overshoot_a > 0) {
            eq.cost_a += cost;
            for (int eid : walk) {
                eq.edges_a.push_back(eid);
                eq.path_a.push_back(g.edge(eid).head);
            }
        } else {
            eq.cost_b += cost;
            for (int eid : walk) {
                eq.edges_b.push_back(eid);
                eq.path_b.push_back(g.edge(eid).head);
            }
        }
    }
    return eq;
}

} // namespace sconn
