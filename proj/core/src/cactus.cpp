#include "sconn/cactus.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <sstream>

namespace sconn {

namespace {

constexpr std::uint16_t kRankSkipB = 0xFFFE; // B does not move; meeting at A's head
constexpr std::uint16_t kRankNone = 0xFFFF;

struct Arc {
    int head;
    Cost cost;
    int edge_id;
};

struct Cell {
    Cost a;
    Cost b;
    bool inf = true;
};

// Deduplicates parallel edges per (tail, head): the cheapest edge (smallest
// id among equals) is the only one a rational player uses under R3.
std::vector<std::vector<Arc>> dedup_adjacency(const Graph& g, const std::vector<char>* mask) {
    std::vector<std::vector<Arc>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int last_head = -1;
        for (int eid : g.out(v)) { // ascending id => ascending (head, cost)
            if (mask && !(*mask)[eid]) continue;
            const Edge& e = g.edge(eid);
            if (e.head == last_head) continue;
            last_head = e.head;
            adj[v].push_back({e.head, e.cost, eid});
        }
        // ids ascend by (head, cost), so arcs are already sorted by head
    }
    return adj;
}

struct DpTables {
    std::vector<int> cols;          // col -> vertex (B positions)
    std::vector<int> col_of;        // vertex -> col or -1
    std::vector<std::vector<Cell>> cost_rows;       // by vertex; freed when possible
    std::vector<std::vector<std::uint32_t>> choice; // by vertex; packed ranks
    Cost root_a, root_b;
    bool root_inf = false;
};

struct DpEngine {
    const Graph& g;
    const PlayerDag& dag;
    const MustVisitSets& mv;
    std::vector<std::vector<Arc>> succ_a; // E' only
    std::vector<std::vector<Arc>> succ_b; // full E
    DpTables t;
    bool keep_rows;

    DpEngine(const Graph& graph, const PlayerDag& d, const MustVisitSets& m, bool keep)
        : g(graph), dag(d), mv(m), keep_rows(keep) {
        std::vector<char> emask(g.edge_count(), 0);
        for (int eid : dag.edge_ids) emask[eid] = 1;
        succ_a = dedup_adjacency(g, &emask);
        succ_b = dedup_adjacency(g, nullptr);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (succ_b[v].size() >= kRankSkipB) throw InvalidInput("vertex out-degree too large");
    }

    void run() {
        int n = g.vertex_count();
        Bitset rb = reachable_from(g, g.t());
        t.col_of.assign(n, -1);
        for (int v = 0; v < n; ++v)
            if (rb.test(v)) {
                t.col_of[v] = (int)t.cols.size();
                t.cols.push_back(v);
            }
        t.cost_rows.assign(n, {});
        t.choice.assign(n, {});

        if (t.col_of[g.t()] < 0) { // B's homebase always has a column
            t.root_inf = true;
            return;
        }

        auto topo = eprime_topological_order(g, dag);
        // Only vertices reachable from s *within E'* get rows.
        std::vector<char> has_row(n, 0);
        for (int v : topo)
            if (mv.reachable.test(v)) has_row[v] = 1;

        // Row x may be freed once every E'-predecessor row is done.
        std::vector<int> pending_preds(n, 0);
        for (int v : topo) {
            if (!has_row[v]) continue;
            for (const Arc& arc : succ_a[v])
                if (has_row[arc.head]) ++pending_preds[arc.head];
        }

        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            int a = *it;
            if (!has_row[a]) continue;
            compute_row(a);
            for (const Arc& arc : succ_a[a]) {
                if (!has_row[arc.head]) continue;
                if (--pending_preds[arc.head] == 0 && !keep_rows && arc.head != g.s())
                    t.cost_rows[arc.head] = {};
            }
        }

        const Cell& root = t.cost_rows[g.s()][t.col_of[g.t()]];
        t.root_inf = root.inf;
        if (!root.inf) {
            t.root_a = root.a;
            t.root_b = root.b;
        }
    }

    void compute_row(int a) {
        std::size_t ncols = t.cols.size();
        auto& row = t.cost_rows[a];
        auto& choice = t.choice[a];
        row.assign(ncols, Cell{});
        choice.assign(ncols, ((std::uint32_t)kRankNone << 16) | kRankNone);
        if (succ_a[a].size() >= kRankSkipB) throw InvalidInput("vertex out-degree too large");

        for (std::size_t j = 0; j < ncols; ++j) {
            int b = t.cols[j];
            Cell& cell = row[j];

            if (mv.contains(a, b)) {
                // B stands on a vertex A must traverse: the game is over.
                cell = {Cost(), Cost(), false};
                continue;
            }
            if (succ_a[a].empty()) continue; // A got stuck -> infinity
            if (succ_b[b].empty()) {
                // B cannot move again; feasible only if A meets b in one step.
                for (std::size_t ra = 0; ra < succ_a[a].size(); ++ra) {
                    if (succ_a[a][ra].head != b) continue;
                    cell = {succ_a[a][ra].cost, Cost(), false};
                    choice[j] = ((std::uint32_t)ra << 16) | kRankSkipB;
                    break;
                }
                continue;
            }

            bool have_best = false;
            Cost best_a, best_b;
            std::uint32_t best_packed = 0;
            for (std::size_t ra = 0; ra < succ_a[a].size(); ++ra) {
                const Arc& move_a = succ_a[a][ra];
                int ap = move_a.head;
                const auto& next_row = t.cost_rows[ap];
                assert(!next_row.empty());

                Cost cand_a, cand_b;
                std::uint16_t rb_rank;
                if (ap == b) {
                    // No move is necessary for B.
                    cand_a = move_a.cost;
                    cand_b = Cost();
                    rb_rank = kRankSkipB;
                } else {
                    // B's best response b(a') by own cost, then optimistic.
                    bool have_b = false;
                    Cost resp_b, resp_a_tail;
                    std::uint16_t resp_rank = 0;
                    for (std::size_t rb = 0; rb < succ_b[b].size(); ++rb) {
                        const Arc& move_b = succ_b[b][rb];
                        int colp = t.col_of[move_b.head];
                        assert(colp >= 0);
                        const Cell& cc = next_row[(std::size_t)colp];
                        if (cc.inf) continue;
                        Cost own = move_b.cost + cc.b;
                        if (!have_b || own < resp_b || (own == resp_b && cc.a < resp_a_tail)) {
                            have_b = true;
                            resp_b = own;
                            resp_a_tail = cc.a;
                            resp_rank = (std::uint16_t)rb;
                        }
                    }
                    if (!have_b) continue; // a' admits no feasible reply
                    cand_a = move_a.cost + resp_a_tail;
                    cand_b = resp_b;
                    rb_rank = resp_rank;
                }

                if (!have_best || cand_a < best_a || (cand_a == best_a && cand_b < best_b)) {
                    have_best = true;
                    best_a = cand_a;
                    best_b = cand_b;
                    best_packed = ((std::uint32_t)ra << 16) | rb_rank;
                }
            }
            if (have_best) {
                cell = {best_a, best_b, false};
                choice[j] = best_packed;
            }
        }
    }

    Equilibrium reconstruct() {
        Equilibrium eq;
        eq.cost_a = t.root_a;
        eq.cost_b = t.root_b;
        int a = g.s(), b = g.t();
        eq.path_a = {a};
        eq.path_b = {b};
        int guard = g.edge_count() + 2;
        while (true) {
            if (--guard < 0) throw std::logic_error("cactus reconstruction did not terminate");
            if (mv.contains(a, b)) {
                eq.meeting = b;
                break;
            }
            std::uint32_t packed = t.choice[a][(std::size_t)t.col_of[b]];
            auto ra = (std::uint16_t)(packed >> 16);
            auto rb = (std::uint16_t)(packed & 0xFFFF);
            if (ra == kRankNone) throw std::logic_error("cactus reconstruction hit an empty choice");
            const Arc& move_a = succ_a[a][ra];
            eq.path_a.push_back(move_a.head);
            eq.edges_a.push_back(move_a.edge_id);
            a = move_a.head;
            if (rb == kRankSkipB) {
                eq.meeting = a;
                break;
            }
            const Arc& move_b = succ_b[b][rb];
            eq.path_b.push_back(move_b.head);
            eq.edges_b.push_back(move_b.edge_id);
            b = move_b.head;
        }
        return eq;
    }

    std::vector<std::string> dump() const {
        std::vector<std::string> lines;
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (t.cost_rows[a].empty()) continue;
            for (std::size_t j = 0; j < t.cols.size(); ++j) {
                const Cell& c = t.cost_rows[a][j];
                std::ostringstream os;
                os << "cost " << g.token(a) << " " << g.token(t.cols[j]) << " "
                   << (c.inf ? "inf" : c.a.decimal_or_fraction()) << " "
                   << (c.inf ? "inf" : c.b.decimal_or_fraction());
                lines.push_back(os.str());
            }
        }
        return lines;
    }
};

// Dedicated token for the dummy homebase of the swapped instance.
std::string fresh_token(const Graph& g, std::string base) {
    while (g.find_vertex(base) != -1) base += "_";
    return base;
}

Graph swapped_instance(const Graph& g, std::string* tprime_token) {
    std::string tp = fresh_token(g, "swap_home");
    std::vector<Graph::EdgeSpec> specs;
    specs.reserve(g.edge_count() + 1);
    for (const Edge& e : g.edges())
        specs.push_back({g.token(e.tail), g.token(e.head), e.cost});
    specs.push_back({tp, g.token(g.t()), Cost()});
    if (tprime_token) *tprime_token = tp;
    // Swapped roles: B (walking from t' over the dummy edge) becomes the
    // acyclic-side player, A keeps homebase s but moves in the B slot.
    return Graph::build(specs, tp, g.token(g.s()), RuleSet{true});
}

// Maps an equilibrium of the swapped instance back onto g.
Equilibrium map_back(const Equilibrium& sw, const Graph& swapped, const Graph& g) {
    auto map_vertex = [&](int v) {
        int orig = g.find_vertex(swapped.token(v));
        if (orig < 0) throw std::logic_error("swapped vertex does not map back");
        return orig;
    };
    auto map_edge = [&](int eid) {
        const Edge& e = swapped.edge(eid);
        int tail = map_vertex(e.tail), head = map_vertex(e.head);
        int best = -1;
        for (int cand : g.out(tail)) {
            const Edge& ce = g.edge(cand);
            if (ce.head == head && ce.cost == e.cost) {
                best = cand;
                break; // ascending ids
            }
        }
        if (best < 0) throw std::logic_error("swapped edge does not map back");
        return best;
    };

    Equilibrium eq;
    eq.cost_a = sw.cost_b;
    eq.cost_b = sw.cost_a;
    eq.meeting = map_vertex(sw.meeting);
    eq.nodes_expanded = sw.nodes_expanded;
    for (std::size_t i = 0; i < sw.path_b.size(); ++i) eq.path_a.push_back(map_vertex(sw.path_b[i]));
    for (int eid : sw.edges_b) eq.edges_a.push_back(map_edge(eid));
    // Drop the dummy homebase prefix from the swapped player's path.
    for (std::size_t i = 1; i < sw.path_a.size(); ++i) eq.path_b.push_back(map_vertex(sw.path_a[i]));
    for (std::size_t i = 1; i < sw.edges_a.size(); ++i) eq.edges_b.push_back(map_edge(sw.edges_a[i]));
    return eq;
}

bool exceptional_configuration(const Graph& g, const PlayerDag& dag) {
    for (const CactusCycle& cycle : dag.cycles) {
        if (!cycle.two_way_from_entry) continue;
        // B must be able to reach a branch vertex without crossing the entry.
        Bitset reach((std::size_t)g.vertex_count());
        if (g.t() != cycle.entry) {
            std::deque<int> q{g.t()};
            reach.set(g.t());
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int eid : g.out(v)) {
                    int w = g.edge(eid).head;
                    if (w == cycle.entry || reach.test(w)) continue;
                    reach.set(w);
                    q.push_back(w);
                }
            }
        }
        for (int v : cycle.vertices)
            if (v != cycle.entry && reach.test(v)) return true;
    }
    return false;
}

Equilibrium dp_solve(const Graph& g, const CactusOptions& opts, const PlayerDag& dag,
                     std::vector<std::string>* dump_out) {
    MustVisitSets mv = must_visit_sets(g, dag);
    DpEngine engine(g, dag, mv, opts.want_tables);
    engine.run();
    if (dump_out) *dump_out = engine.dump();
    if (engine.t.root_inf) throw Infeasible();
    return engine.reconstruct();
}

} // namespace

bool role_swap_needed(const Graph& g) {
    PlayerDag dag = player_a_dag(g);
    return exceptional_configuration(g, dag);
}

CactusResult solve_cactus_r3_full(const Graph& g, const CactusOptions& opts) {
    if (!is_cactus(g)) throw InvalidInput("not a cactus");

    CactusResult result;
    if (g.s() == g.t()) {
        result.equilibrium.meeting = g.s();
        result.equilibrium.path_a = {g.s()};
        result.equilibrium.path_b = {g.t()};
        return result;
    }

    bool swap;
    switch (opts.orientation) {
        case CactusOptions::Orientation::kNormal: swap = false; break;
        case CactusOptions::Orientation::kSwapped: swap = true; break;
        default: swap = role_swap_needed(g); break;
    }

    if (!swap) {
        PlayerDag dag = player_a_dag(g);
        result.equilibrium =
            dp_solve(g, opts, dag, opts.want_tables ? &result.table_dump : nullptr);
        return result;
    }

    Graph swapped = swapped_instance(g, nullptr);
    PlayerDag dag = player_a_dag(swapped);
    if (opts.orientation == CactusOptions::Orientation::kAuto &&
        exceptional_configuration(swapped, dag))
        throw InvalidInput("dp/exact divergence: exceptional cycles in both orientations");
    Equilibrium sw =
        dp_solve(swapped, opts, dag, opts.want_tables ? &result.table_dump : nullptr);
    result.equilibrium = map_back(sw, swapped, g);
    result.role_swapped = true;
    return result;
}

Equilibrium solve_cactus_r3(const Graph& g) {
    return solve_cactus_r3_full(g).equilibrium;
}

SolveOutcome solve_dispatch(const Graph& g, RuleSet rules, Engine engine, std::uint64_t budget) {
    if (engine == Engine::kAuto) {
        if (is_tree(g)) engine = Engine::kTree;
        else if (rules.simple_paths && is_cactus(g)) engine = Engine::kCactus;
        else engine = Engine::kExact;
    }
    switch (engine) {
        case Engine::kTree: return {solve_tree(g), Engine::kTree};
        case Engine::kCactus:
            if (!rules.simple_paths)
                throw InvalidInput("cactus engine requires rules r3");
            return {solve_cactus_r3(g), Engine::kCactus};
        default: return {solve_exact(g, rules, budget), Engine::kExact};
    }
}

} // namespace sconn
