#include "sconn/game.hpp"

#include <algorithm>
#include <sstream>

namespace sconn {

GameState initial_state(const Graph& g, RuleSet rules) {
    (void)rules;
    GameState st;
    st.pos_a = g.s();
    st.pos_b = g.t();
    st.a_to_move = true;
    st.path_a = {g.s()};
    st.path_b = {g.t()};
    st.used_edges = Bitset((std::size_t)g.edge_count());
    st.visited_a = Bitset((std::size_t)g.vertex_count());
    st.visited_b = Bitset((std::size_t)g.vertex_count());
    st.visited_a.set(g.s());
    st.visited_b.set(g.t());
    if (g.s() == g.t()) st.meeting = g.s();
    return st;
}

std::vector<int> raw_moves(const GameState& state, const Graph& g, RuleSet rules) {
    if (state.terminal()) throw InvalidInput("terminal state");
    int pos = state.a_to_move ? state.pos_a : state.pos_b;
    const Bitset& own_visited = state.a_to_move ? state.visited_a : state.visited_b;
    std::vector<int> moves;
    for (int eid : g.out(pos)) {
        if (state.used_edges.test((std::size_t)eid)) continue;
        if (rules.simple_paths && own_visited.test((std::size_t)g.edge(eid).head)) continue;
        moves.push_back(eid);
    }
    return moves;
}

GameState apply_move(const GameState& state, const Graph& g, int edge_id) {
    if (state.terminal()) throw InvalidInput("illegal move: game already over");
    const Edge& e = g.edge(edge_id);
    int pos = state.a_to_move ? state.pos_a : state.pos_b;
    if (e.tail != pos) throw InvalidInput("illegal move: edge does not leave current position");
    if (state.used_edges.test((std::size_t)edge_id)) throw InvalidInput("illegal move: edge already used");

    GameState next = state;
    next.used_edges.set((std::size_t)edge_id);
    if (state.a_to_move) {
        next.pos_a = e.head;
        next.path_a.push_back(e.head);
        next.edges_a.push_back(edge_id);
        next.visited_a.set((std::size_t)e.head);
        if (state.visited_b.test((std::size_t)e.head)) next.meeting = e.head;
    } else {
        next.pos_b = e.head;
        next.path_b.push_back(e.head);
        next.edges_b.push_back(edge_id);
        next.visited_b.set((std::size_t)e.head);
        if (state.visited_a.test((std::size_t)e.head)) next.meeting = e.head;
    }
    next.a_to_move = !state.a_to_move;
    return next;
}

StateKey state_key(const GameState& state, const Graph& g, RuleSet rules) {
    StateKey key;
    key.prefix = (std::uint64_t)state.pos_a * 2u * (std::uint64_t)g.vertex_count() +
                 (std::uint64_t)state.pos_b * 2u + (state.a_to_move ? 1u : 0u);
    if (rules.simple_paths) {
        Bitset combo((std::size_t)g.vertex_count() * 2);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (state.visited_a.test((std::size_t)v)) combo.set((std::size_t)v);
            if (state.visited_b.test((std::size_t)v)) combo.set((std::size_t)(v + g.vertex_count()));
        }
        key.resources = std::move(combo);
    } else {
        key.resources = state.used_edges;
    }
    return key;
}

bool FeasibilityOracle::feasible(const GameState& state) {
    if (state.terminal()) return true;

    StateKey key = state_key(state, g_, rules_);
    std::uint64_t h = key.hash();
    if (auto it = cache_.find(h); it != cache_.end())
        for (const auto& [stored, value] : it->second)
            if (stored == key) return value;

    ++states_explored_;
    bool ok = false;
    auto moves = raw_moves(state, g_, rules_);
    for (int eid : moves) {
        GameState next = apply_move(state, g_, eid);
        if (feasible(next)) {
            ok = true;
            break;
        }
    }
    cache_[h].push_back({key, ok});
    return ok;
}

bool feasible(const GameState& state, const Graph& g, RuleSet rules) {
    FeasibilityOracle oracle(g, rules);
    return oracle.feasible(state);
}

std::vector<int> legal_moves(const GameState& state, const Graph& g, RuleSet rules) {
    auto moves = raw_moves(state, g, rules);
    FeasibilityOracle oracle(g, rules);
    std::vector<int> legal;
    for (int eid : moves)
        if (oracle.feasible(apply_move(state, g, eid))) legal.push_back(eid);
    return legal;
}

bool feasibility_precheck(const Graph& g, RuleSet rules) {
    return feasible(initial_state(g, rules), g, rules);
}

Cost play_cost(std::span<const int> edge_ids, const Graph& g) {
    Cost total;
    int prev_head = -1;
    for (int eid : edge_ids) {
        const Edge& e = g.edge(eid);
        if (prev_head != -1 && e.tail != prev_head) throw InvalidInput("disconnected walk");
        prev_head = e.head;
        total += e.cost;
    }
    return total;
}

Cost play_cost(const std::vector<std::string>& vertex_tokens, const Graph& g) {
    Cost total;
    for (std::size_t i = 0; i + 1 < vertex_tokens.size(); ++i) {
        int u = g.find_vertex(vertex_tokens[i]);
        int v = g.find_vertex(vertex_tokens[i + 1]);
        if (u < 0 || v < 0) throw InvalidInput("unknown vertex");
        bool found = false;
        Cost best;
        for (int eid : g.out(u)) {
            const Edge& e = g.edge(eid);
            if (e.head != v) continue;
            if (!found || e.cost < best) {
                best = e.cost;
                found = true;
            }
        }
        if (!found) throw InvalidInput("disconnected walk");
        total += best;
    }
    return total;
}

std::string format_transcript(const GameState& state, const Graph& g) {
    std::ostringstream out;
    // Interleave in play order: A first, strictly alternating.
    std::size_t ia = 0, ib = 0;
    bool a_turn = true;
    while (ia < state.edges_a.size() || ib < state.edges_b.size()) {
        if (a_turn && ia < state.edges_a.size()) {
            const Edge& e = g.edge(state.edges_a[ia++]);
            out << "A " << g.token(e.tail) << " " << g.token(e.head) << " " << e.id << " "
                << e.cost.decimal_or_fraction() << "\n";
        } else if (!a_turn && ib < state.edges_b.size()) {
            const Edge& e = g.edge(state.edges_b[ib++]);
            out << "B " << g.token(e.tail) << " " << g.token(e.head) << " " << e.id << " "
                << e.cost.decimal_or_fraction() << "\n";
        }
        a_turn = !a_turn;
    }
    if (state.terminal()) {
        Cost ca = play_cost(std::span<const int>(state.edges_a), g);
        Cost cb = play_cost(std::span<const int>(state.edges_b), g);
        out << "meet " << g.token(state.meeting) << " " << ca.decimal_or_fraction() << " "
            << cb.decimal_or_fraction() << "\n";
    }
    return out.str();
}

} // namespace sconn
