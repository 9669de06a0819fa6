#include "sconn/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sconn/analysis.hpp"
#include "sconn/cactus.hpp"
#include "sconn/game.hpp"

namespace sconn {

namespace {

using Specs = std::vector<Graph::EdgeSpec>;

std::string tok(const std::string& prefix, int i) { return prefix + std::to_string(i); }
std::string tok2(const std::string& prefix, int i, int j) {
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

// Deterministic generator-local PRNG (splitmix64); stdlib distributions are
// avoided so instance bytes never depend on the standard library build.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(unsigned percent) { return below(100) < percent; }
};

Cost random_cost(Rng& rng) {
    static const std::int64_t dens[3] = {1, 2, 4};
    return Cost((std::int64_t)rng.below(9), dens[rng.below(3)]);
}

} // namespace

Graph gen_example(int which, Cost m_value) {
    if (which == 1) {
        Specs e = {
            {"s", "a", Cost(1)}, {"s", "d", Cost(2)}, {"a", "b", Cost(3)},
            {"d", "b", Cost(1)}, {"d", "e", Cost(4)}, {"b", "e", Cost(1)},
            {"c", "b", Cost(4)}, {"c", "e", Cost(2)}, {"t", "c", Cost(3)},
            {"t", "f", Cost(1)}, {"f", "e", Cost(5)},
        };
        return Graph::build(e, "s", "t");
    }
    if (which == 2) {
        if (!(m_value > Cost(2))) throw InvalidInput("example 2 requires M > 2");
        Specs e = {
            {"s", "v1", Cost(2)}, {"s", "v2", Cost(1)}, {"t", "v1", Cost(1)}, {"t", "v2", m_value},
        };
        return Graph::build(e, "s", "t");
    }
    if (which == 3) {
        if (!(m_value >= Cost(1))) throw InvalidInput("example 3 requires M >= 1");
        Cost m1 = m_value + Cost(1);
        Specs e = {
            {"s", "v1", Cost(0)},
            {"v1", "v2", m_value},
            {"v1", "v9", m1},
            {"v9", "v4", m1},
            {"v2", "v3", Cost(0)},
            {"v3", "w4", Cost(0)},
            {"w4", "w5", Cost(0)},
            {"v2", "v4", m_value},
            {"v4", "v2", m_value},
            {"v4", "v5", Cost(2)},
            {"v5", "v4", Cost(2)},
            {"v5", "v6", Cost(2)},
            {"v6", "v5", Cost(2)},
            {"t", "v6", Cost(0)},
            {"v6", "v8", Cost(2)},
            {"v8", "w2", Cost(2)},
            {"w2", "w1", Cost(2)},
            {"w1", "v5", Cost(2)},
            {"t", "v7", Cost(0)},
            {"v7", "w3", Cost(0)},
            {"w3", "v4", Cost(0)},
        };
        return Graph::build(e, "s", "t");
    }
    throw InvalidInput("example must be 1, 2 or 3");
}

GeneratedInstance gen_qsat_bipartite(const QuantifiedFormula& f, bool simple_path_variant) {
    if (!is_normalized(f)) throw InvalidInput("formula not normalized");
    int n = f.num_vars;
    int m = (int)f.clauses.size();
    if (n < 2) throw InvalidInput("formula needs at least two variables");
    Cost eps(1, 2 * (std::int64_t)n + 7);

    Specs e;
    auto hex = [&](int i, int j) { return tok2("v", i, j); };

    for (int i = 1; i <= n; ++i) {
        e.push_back({hex(i, 0), hex(i, 1), eps}); // edge x_i
        e.push_back({hex(i, 1), hex(i, 2), eps});
        e.push_back({hex(i, 2), hex(i, 3), eps});
        e.push_back({hex(i, 0), hex(i, 5), eps}); // edge !x_i
        e.push_back({hex(i, 5), hex(i, 4), eps});
        e.push_back({hex(i, 4), hex(i, 3), eps});
    }
    // Same-parity hexagons are chained; the ends feed y resp. d_B.
    for (int i = 1; i + 2 <= n; ++i) e.push_back({hex(i, 3), hex(i + 2, 0), eps});
    e.push_back({hex(n - 1, 3), "y", eps});
    e.push_back({hex(n, 3), "dB", eps});
    e.push_back({"y", "dA", eps});

    for (int j = 1; j <= m; ++j) {
        e.push_back({"dA", tok("CA", j), eps});
        e.push_back({tok("CA", j), tok("qA", j), eps});
        e.push_back({"dB", tok("CB", j), eps});
        e.push_back({tok("CB", j), tok("qB", j), eps});
        if (simple_path_variant) {
            e.push_back({tok("qA", j), tok("qB", j), Cost(1)});
            e.push_back({tok("qB", j), tok("qA", j), Cost(1)});
        } else {
            e.push_back({tok("qA", j), tok("w", j), eps});
            e.push_back({tok("w", j), tok("z", j), Cost(1)});
            e.push_back({tok("z", j), tok("qB", j), Cost(21, 10)});
            e.push_back({tok("qB", j), tok("z", j), eps});
            e.push_back({tok("z", j), tok("w", j), Cost(1)});
        }

        std::set<std::pair<int, bool>> seen;
        for (const Literal& lit : f.clauses[(std::size_t)j - 1]) {
            if (!seen.insert({lit.var, lit.negated}).second) continue;
            int i = lit.var;
            if (!QuantifiedFormula::universal(i)) {
                if (lit.negated) {
                    e.push_back({tok("CA", j), hex(i, 1), eps});
                    e.push_back({hex(i, 2), tok("qA", j), eps});
                } else {
                    e.push_back({tok("CA", j), hex(i, 5), eps});
                    e.push_back({hex(i, 4), tok("qA", j), eps});
                }
            } else {
                if (lit.negated) e.push_back({tok("qB", j), hex(i, 5), eps});
                else e.push_back({tok("qB", j), hex(i, 1), eps});
            }
        }
    }

    GeneratedInstance out{
        Graph::build(e, hex(1, 0), hex(2, 0), RuleSet{simple_path_variant}),
        {}};
    out.header.push_back(std::string("qsat gadget") +
                         (simple_path_variant ? " (simple-path variant)" : ""));
    out.header.push_back("formula: " + f.str());
    out.header.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " eps=" + eps.str());
    return out;
}

GeneratedInstance gen_vertex_cover_dag(const VertexCoverInstance& h, int k,
                                       const VertexCoverOptions& opts) {
    if (k < 3) throw InvalidInput("k < 3");
    int n = h.num_vertices;
    if (n < 2) throw InvalidInput("vertex cover instance needs at least two vertices");

    std::vector<std::pair<int, int>> hedges;
    for (auto [a, b] : h.edges) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw InvalidInput("bad vertex cover edge");
        hedges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(hedges.begin(), hedges.end());
    hedges.erase(std::unique(hedges.begin(), hedges.end()), hedges.end());
    if (hedges.empty()) throw InvalidInput("vertex cover instance needs an edge");

    // The construction assumes {1,2} is an edge; relabel deterministically.
    if (!std::binary_search(hedges.begin(), hedges.end(), std::make_pair(1, 2))) {
        auto [a, b] = hedges.front();
        std::vector<int> relabel(n + 1);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::swap(relabel[a], relabel[1]);
        // After the first swap the old label b may have moved.
        int b_now = b;
        if (b == 1) b_now = a;
        std::swap(relabel[b_now], relabel[2]);
        for (auto& [x, y] : hedges) {
            x = relabel[x];
            y = relabel[y];
            if (x > y) std::swap(x, y);
        }
        std::sort(hedges.begin(), hedges.end());
    }

    int m = (int)hedges.size();
    std::int64_t edge_total = 5 + k + 2LL * n + (std::int64_t)n * (n - 1) / 2 + 21LL * m;
    Cost eps(1, edge_total);
    Cost heavy(opts.text_costs ? 2 : 3);

    Specs e;
    e.push_back({"g", "d", Cost(3)});
    e.push_back({"d", "dp", eps});
    e.push_back({"g", "f", eps});
    e.push_back({"t", tok("u", 1), eps});
    for (int i = 1; i <= k; ++i) e.push_back({tok("u", i), tok("u", i + 1), eps});
    e.push_back({tok("u", k + 1), "d", eps});

    for (int i = 1; i <= n; ++i) {
        e.push_back({"s", tok("s", i), eps});
        e.push_back({tok("s", i), "g", eps});
        for (int j = i + 1; j <= n; ++j) e.push_back({tok("s", i), tok("s", j), eps});
    }

    for (auto [i, j] : hedges) {
        auto T = tok2("t", i, j), B = tok2("b", i, j), L = tok2("l", i, j), H = tok2("h", i, j);
        auto V = tok2("v", i, j), W = tok2("w", i, j), Y = tok2("y", i, j), Z = tok2("z", i, j);
        auto SE = tok2("se", i, j);
        auto AL = tok2("al", i, j), BE = tok2("be", i, j), GA = tok2("ga", i, j),
             ET = tok2("et", i, j);
        auto DE = tok2("de", i, j), KA = tok2("ka", i, j), LA = tok2("la", i, j),
             MU = tok2("mu", i, j);
        e.push_back({tok("u", k + 1), T, eps});
        e.push_back({T, B, eps});
        e.push_back({B, L, eps});
        e.push_back({B, H, eps});
        e.push_back({L, V, Cost(1)});
        e.push_back({L, W, eps});
        e.push_back({H, Y, Cost(1)});
        e.push_back({H, Z, eps});
        e.push_back({V, tok("s", i), eps});
        e.push_back({Y, tok("s", j), eps});
        e.push_back({"f", SE, eps});
        e.push_back({SE, AL, eps});
        e.push_back({AL, BE, eps});
        e.push_back({BE, GA, eps});
        e.push_back({GA, ET, heavy});
        e.push_back({SE, DE, eps});
        e.push_back({DE, KA, eps});
        e.push_back({KA, LA, eps});
        e.push_back({LA, MU, heavy});
        e.push_back({AL, Z, Cost(2)});
        e.push_back({DE, W, Cost(2)});
    }

    Graph g = Graph::build(e, "s", "t");
    if (g.edge_count() != edge_total)
        throw std::logic_error("vertex cover gadget edge count mismatch");

    GeneratedInstance out{std::move(g), {}};
    if (opts.bipartite_split) {
        Specs split;
        for (const Edge& edge : out.graph.edges()) {
            std::string mid = tok("mid", edge.id);
            Cost half = edge.cost * Cost(1, 2);
            split.push_back({out.graph.token(edge.tail), mid, half});
            split.push_back({mid, out.graph.token(edge.head), half});
        }
        out.graph = Graph::build(split, "s", "t");
    }

    out.header.push_back(std::string("vertex-cover gadget") +
                         (opts.bipartite_split ? " (bipartite split)" : ""));
    out.header.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " k=" + std::to_string(k));
    out.header.push_back("eps=" + eps.str());
    return out;
}

GeneratedInstance gen_3partition_cactus(const std::vector<std::int64_t>& items,
                                        const ThreePartitionOptions& opts) {
    if (items.empty() || items.size() % 3 != 0) throw InvalidInput("item count not multiple of 3");
    for (auto c : items)
        if (c <= 0) throw InvalidInput("items must be positive");
    std::int64_t n = (std::int64_t)items.size() / 3;
    std::int64_t sum = std::accumulate(items.begin(), items.end(), (std::int64_t)0);
    if (sum % n != 0) throw InvalidInput("sum not divisible by n");
    std::int64_t ktilde = sum / n;
    if (ktilde % 2 != 0) throw InvalidInput("non-integral cycle length");

    std::int64_t M = 2 * n * ktilde;
    std::int64_t K = 3 * M + 2 * ktilde;
    std::int64_t three_m4 = 3 * M / 4;
    std::int64_t maxitem = *std::max_element(items.begin(), items.end());
    std::int64_t padding = opts.padding_cycles >= 0
                               ? opts.padding_cycles
                               : (M + 3) / 4 + (5 * maxitem + 1) / 2;

    Specs e;
    auto zero = Cost(0);

    // Directed zero-cost cycle of `len` edges hanging at `hub`.
    auto add_cycle = [&](const std::string& hub, const std::string& prefix, std::int64_t len,
                         Cost first_cost) {
        std::string prev = hub;
        for (std::int64_t j = 1; j < len; ++j) {
            std::string v = prefix + "_" + std::to_string(j);
            e.push_back({prev, v, j == 1 ? first_cost : zero});
            prev = v;
        }
        e.push_back({prev, hub, len == 1 ? first_cost : zero});
    };

    // A's spine is one edge longer than B's: the synchronized position has B
    // choosing at b4 while A stands at a4.
    e.push_back({"a1", "a2", zero});
    e.push_back({"a2", "am", zero});
    e.push_back({"am", "a3", zero});
    e.push_back({"a3", "a2", zero}); // the way "back" towards a2
    std::string a_prev = "a3";
    for (int i = 0; i < opts.b_spine_extra; ++i) {
        std::string v = tok("as", i);
        e.push_back({a_prev, v, zero});
        a_prev = v;
    }
    e.push_back({a_prev, "a4", zero});
    e.push_back({"a2", "ax", zero}); // two-edge zero path to t
    e.push_back({"ax", "t", zero});

    e.push_back({"b1", "b2", zero});
    std::string b_prev = "b2";
    for (int i = 0; i < opts.b_spine_extra; ++i) {
        std::string v = tok("bs", i);
        e.push_back({b_prev, v, zero});
        b_prev = v;
    }
    e.push_back({b_prev, "b3", zero});
    e.push_back({"b3", "b4", zero});
    e.push_back({"b1", "bd1", Cost(1)}); // direct three-edge path, cost 1
    e.push_back({"bd1", "bd2", zero});
    e.push_back({"bd2", "t", zero});
    e.push_back({"b4", "b5", zero}); // return path b4 b5 b3 b2 t
    e.push_back({"b5", "b3", zero});
    e.push_back({"b3", "b2", zero});
    e.push_back({"b2", "t", zero});

    for (std::size_t i = 0; i < items.size(); ++i)
        add_cycle("a4", tok("ca", (int)i), M + 2 * items[i], zero);
    add_cycle("a4", "cax0", three_m4, zero);
    add_cycle("a4", "cax1", three_m4, zero);
    // A's escape: six edges to t, the first of cost 1.
    e.push_back({"a4", "ae1", Cost(1)});
    e.push_back({"ae1", "ae2", zero});
    e.push_back({"ae2", "ae3", zero});
    e.push_back({"ae3", "ae4", zero});
    e.push_back({"ae4", "ae5", zero});
    e.push_back({"ae5", "t", zero});

    for (std::int64_t i = 0; i + 1 < n; ++i) add_cycle("b4", tok("cb", (int)i), K, zero);
    add_cycle("b4", "cbl", 3 * M - 2, Cost(2)); // the unique cost-2 edge
    add_cycle("b4", "cbx0", three_m4, zero);
    add_cycle("b4", "cbx1", three_m4, zero);

    // Padding 2-cycles chained off b5.
    std::string prev = "b5";
    for (std::int64_t i = 1; i <= padding; ++i) {
        std::string v = tok("r", (int)i);
        e.push_back({prev, v, zero});
        e.push_back({v, prev, zero});
        prev = v;
    }

    GeneratedInstance out{Graph::build(e, "a1", "b1"), {}};
    out.header.push_back("3-partition cactus gadget");
    std::ostringstream itemlist;
    for (std::size_t i = 0; i < items.size(); ++i) itemlist << (i ? "," : "") << items[i];
    out.header.push_back("items=" + itemlist.str());
    out.header.push_back("n=" + std::to_string(n) + " Ktilde=" + std::to_string(ktilde));
    out.header.push_back("M=" + std::to_string(M) + " K=" + std::to_string(K));
    return out;
}

namespace {

bool instance_feasible(const Graph& g) {
    RuleSet rules = g.rules();
    if (g.vertex_count() <= 64) return feasibility_precheck(g, rules);
    // Large instances exist only for the scaling benchmarks; the DP verdict
    // stands in for the exponential cooperative oracle there.
    try {
        return !solve_cactus_r3(g).path_a.empty();
    } catch (const Infeasible&) {
        return false;
    }
}

Graph random_cactus_attempt(int n, Rng& rng) {
    struct UEdge {
        int u, v;
        Cost cost;
    };
    std::vector<UEdge> edges;
    int count = 1;
    std::vector<int> hubs{0};
    bool big = n > 64;

    while (count < n) {
        int hub;
        if (big && hubs.size() > 8)
            hub = hubs[hubs.size() - 1 - rng.below(8)];
        else
            hub = hubs[rng.below(hubs.size())];

        int room = n - count;
        if (room >= 2 && rng.chance(45)) {
            // Cycle of length 2..6 at the hub.
            int len = 2 + (int)rng.below((std::uint64_t)std::min(room, 5));
            std::vector<int> members{hub};
            for (int i = 0; i < len - 1; ++i) members.push_back(count++);
            bool directed = rng.chance(55);
            if (directed) {
                for (int i = 0; i < len; ++i)
                    edges.push_back({members[i], members[(i + 1) % len], random_cost(rng)});
            } else {
                // Two branches leaving the hub and converging at a split point.
                int split = 1 + (int)rng.below((std::uint64_t)(len - 1));
                for (int i = 0; i < split; ++i)
                    edges.push_back({members[i], members[i + 1], random_cost(rng)});
                for (int i = len - 1; i >= split; --i)
                    edges.push_back({members[(i + 1) % len], members[i], random_cost(rng)});
            }
            for (std::size_t i = 1; i < members.size(); ++i)
                if (rng.chance(30)) hubs.push_back(members[i]);
        } else {
            int v = count++;
            bool away = rng.chance(70);
            if (away) edges.push_back({hub, v, random_cost(rng)});
            else edges.push_back({v, hub, random_cost(rng)});
            hubs.push_back(v);
        }
    }

    int t = 1 + (int)rng.below((std::uint64_t)(n - 1));
    Specs specs;
    for (const auto& ue : edges) specs.push_back({tok("n", ue.u), tok("n", ue.v), ue.cost});
    return Graph::build(specs, "n0", tok("n", t), RuleSet{true});
}

Graph random_tree_attempt(int n, Rng& rng) {
    std::vector<int> parent(n, 0);
    for (int v = 1; v < n; ++v) {
        if (n > 64 && v > 8) parent[v] = v - 1 - (int)rng.below(8);
        else parent[v] = (int)rng.below((std::uint64_t)v);
    }
    int s = 0;
    int t = 1 + (int)rng.below((std::uint64_t)(n - 1));

    // The s-t path carries a forced meeting point; orient the prefix away
    // from s and the suffix away from t.
    std::vector<int> spath;
    {
        std::vector<int> up;
        for (int v = t; v != 0; v = parent[v]) up.push_back(v);
        up.push_back(0);
        std::reverse(up.begin(), up.end());
        spath = up; // path from s=0 down to t
    }
    std::size_t meet = rng.below(spath.size());

    std::set<std::pair<int, int>> forward; // oriented tree edges
    for (std::size_t i = 0; i + 1 < spath.size(); ++i) {
        if (i < meet) forward.insert({spath[i], spath[i + 1]});
        else forward.insert({spath[i + 1], spath[i]});
    }

    Specs specs;
    for (int v = 1; v < n; ++v) {
        int p = parent[v];
        std::pair<int, int> down{p, v}, upE{v, p};
        bool on_path = forward.count(down) || forward.count(upE);
        std::pair<int, int> dir;
        if (on_path) dir = forward.count(down) ? down : upE;
        else dir = rng.chance(70) ? down : upE;
        specs.push_back({tok("n", dir.first), tok("n", dir.second), random_cost(rng)});
    }
    return Graph::build(specs, "n0", tok("n", t), RuleSet{true});
}

Graph random_dag_attempt(int n, Rng& rng) {
    Specs specs;
    for (int v = 1; v < n; ++v) {
        int u = (int)rng.below((std::uint64_t)v);
        specs.push_back({tok("n", u), tok("n", v), random_cost(rng)});
        if (v >= 2 && rng.chance(50)) {
            int w = (int)rng.below((std::uint64_t)v);
            if (w != u) specs.push_back({tok("n", w), tok("n", v), random_cost(rng)});
        }
    }
    int t = 1 + (int)rng.below((std::uint64_t)(n - 1));
    return Graph::build(specs, "n0", tok("n", t), RuleSet{});
}

} // namespace

Graph gen_random_cactus(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    Rng rng(seed * 0x100000001b3ull + (std::uint64_t)n);
    for (int attempt = 0; attempt < 300; ++attempt) {
        Graph g = random_cactus_attempt(n, rng);
        if (instance_feasible(g)) return g;
    }
    throw InvalidInput("resampling budget exceeded");
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    Rng rng(seed * 0x100000001b3ull + 0x7ull * (std::uint64_t)n);
    for (int attempt = 0; attempt < 300; ++attempt) {
        Graph g = random_tree_attempt(n, rng);
        if (g.vertex_count() <= 64) {
            if (feasibility_precheck(g, g.rules())) return g;
        } else {
            try {
                solve_tree(g);
                return g;
            } catch (const Infeasible&) {
            }
        }
    }
    throw InvalidInput("resampling budget exceeded");
}

Graph gen_random_dag(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    Rng rng(seed * 0x100000001b3ull + 0x2bull * (std::uint64_t)n);
    for (int attempt = 0; attempt < 300; ++attempt) {
        Graph g = random_dag_attempt(n, rng);
        if (feasibility_precheck(g, g.rules())) return g;
    }
    throw InvalidInput("resampling budget exceeded");
}

} // namespace sconn
