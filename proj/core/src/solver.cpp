#include "sconn/solver.hpp"

#include <algorithm>

namespace sconn {

std::vector<std::string> Equilibrium::path_a_tokens(const Graph& g) const {
    std::vector<std::string> out;
    out.reserve(path_a.size());
    for (int v : path_a) out.push_back(g.token(v));
    return out;
}

std::vector<std::string> Equilibrium::path_b_tokens(const Graph& g) const {
    std::vector<std::string> out;
    out.reserve(path_b.size());
    for (int v : path_b) out.push_back(g.token(v));
    return out;
}

StateValue ExactSolver::evaluate(const GameState& state) {
    if (state.terminal()) return {};

    StateKey key = state_key(state, g_, rules_);
    std::uint64_t h = key.hash();
    if (auto it = memo_.find(h); it != memo_.end())
        for (const auto& [stored, value] : it->second)
            if (stored == key) return value;

    if (++nodes_expanded_ > budget_) throw BudgetExceeded();

    StateValue best = StateValue::infinite();
    bool mover_is_a = state.a_to_move;
    for (int eid : raw_moves(state, g_, rules_)) {
        GameState next = apply_move(state, g_, eid);
        StateValue child = evaluate(next);
        if (child.infeasible) continue;
        Cost move_cost = g_.edge(eid).cost;
        Cost own = (mover_is_a ? child.cost_a : child.cost_b) + move_cost;
        Cost opp = mover_is_a ? child.cost_b : child.cost_a;
        bool better;
        if (best.infeasible) {
            better = true;
        } else {
            Cost best_own = mover_is_a ? best.cost_a : best.cost_b;
            Cost best_opp = mover_is_a ? best.cost_b : best.cost_a;
            better = own < best_own || (own == best_own && opp < best_opp);
        }
        if (better) {
            best.infeasible = false;
            best.cost_a = mover_is_a ? own : opp;
            best.cost_b = mover_is_a ? opp : own;
        }
    }

    memo_[h].push_back({std::move(key), best});
    return best;
}

int ExactSolver::best_move(const GameState& state) {
    if (state.terminal()) throw InvalidInput("terminal state");
    int best_eid = -1;
    StateValue best = StateValue::infinite();
    bool mover_is_a = state.a_to_move;
    for (int eid : raw_moves(state, g_, rules_)) {
        GameState next = apply_move(state, g_, eid);
        StateValue child = evaluate(next);
        if (child.infeasible) continue;
        Cost move_cost = g_.edge(eid).cost;
        Cost own = (mover_is_a ? child.cost_a : child.cost_b) + move_cost;
        Cost opp = mover_is_a ? child.cost_b : child.cost_a;
        bool better;
        if (best.infeasible) {
            better = true;
        } else {
            Cost best_own = mover_is_a ? best.cost_a : best.cost_b;
            Cost best_opp = mover_is_a ? best.cost_b : best.cost_a;
            better = own < best_own || (own == best_own && opp < best_opp);
        }
        if (better) {
            best.infeasible = false;
            best.cost_a = mover_is_a ? own : opp;
            best.cost_b = mover_is_a ? opp : own;
            best_eid = eid;
        }
    }
    if (best_eid == -1) throw Infeasible();
    return best_eid;
}

Equilibrium ExactSolver::solve() {
    GameState state = initial_state(g_, rules_);
    StateValue root = evaluate(state);
    if (root.infeasible) throw Infeasible();

    while (!state.terminal()) state = apply_move(state, g_, best_move(state));

    Equilibrium eq;
    eq.cost_a = root.cost_a;
    eq.cost_b = root.cost_b;
    eq.path_a = state.path_a;
    eq.path_b = state.path_b;
    eq.edges_a = state.edges_a;
    eq.edges_b = state.edges_b;
    eq.meeting = state.meeting;
    eq.nodes_expanded = nodes_expanded_;
    return eq;
}

StateValue evaluate_state(const GameState& state, const Graph& g, RuleSet rules,
                          std::uint64_t budget) {
    ExactSolver solver(g, rules, budget);
    return solver.evaluate(state);
}

Equilibrium solve_exact(const Graph& g, RuleSet rules, std::uint64_t budget) {
    ExactSolver solver(g, rules, budget);
    return solver.solve();
}

namespace {

// Cooperative value of a state: (remaining total, remaining cost of A),
// compared lexicographically; infeasible when no completion exists.
struct CoopValue {
    bool infeasible = true;
    Cost total;
    Cost of_a;
};

class CoopSolver {
public:
    CoopSolver(const Graph& g, RuleSet rules, std::uint64_t budget)
        : g_(g), rules_(rules), budget_(budget) {}

    CoopValue evaluate(const GameState& state) {
        if (state.terminal()) return {false, {}, {}};

        StateKey key = state_key(state, g_, rules_);
        std::uint64_t h = key.hash();
        if (auto it = memo_.find(h); it != memo_.end())
            for (const auto& [stored, value] : it->second)
                if (stored == key) return value;

        if (++nodes_expanded_ > budget_) throw BudgetExceeded();

        CoopValue best;
        for (int eid : raw_moves(state, g_, rules_)) {
            CoopValue child = evaluate(apply_move(state, g_, eid));
            if (child.infeasible) continue;
            Cost move_cost = g_.edge(eid).cost;
            Cost total = child.total + move_cost;
            Cost of_a = child.of_a + (state.a_to_move ? move_cost : Cost());
            if (best.infeasible || total < best.total ||
                (total == best.total && of_a < best.of_a)) {
                best = {false, total, of_a};
            }
        }
        memo_[h].push_back({std::move(key), best});
        return best;
    }

    // Smallest-edge-id move preserving the cooperative optimum.
    int best_move(const GameState& state) {
        CoopValue target = evaluate(state);
        for (int eid : raw_moves(state, g_, rules_)) {
            CoopValue child = evaluate(apply_move(state, g_, eid));
            if (child.infeasible) continue;
            Cost move_cost = g_.edge(eid).cost;
            Cost total = child.total + move_cost;
            Cost of_a = child.of_a + (state.a_to_move ? move_cost : Cost());
            if (total == target.total && of_a == target.of_a) return eid;
        }
        throw Infeasible();
    }

    std::uint64_t nodes_expanded() const { return nodes_expanded_; }

private:
    const Graph& g_;
    RuleSet rules_;
    std::uint64_t budget_;
    std::uint64_t nodes_expanded_ = 0;
    std::unordered_map<std::uint64_t, std::vector<std::pair<StateKey, CoopValue>>> memo_;
};

} // namespace

Equilibrium cooperative_optimum(const Graph& g, RuleSet rules, std::uint64_t budget) {
    CoopSolver solver(g, rules, budget);
    GameState state = initial_state(g, rules);
    CoopValue root = solver.evaluate(state);
    if (root.infeasible) throw Infeasible();

    while (!state.terminal()) state = apply_move(state, g, solver.best_move(state));

    Equilibrium eq;
    eq.cost_a = root.of_a;
    eq.cost_b = root.total - root.of_a;
    eq.path_a = state.path_a;
    eq.path_b = state.path_b;
    eq.edges_a = state.edges_a;
    eq.edges_b = state.edges_b;
    eq.meeting = state.meeting;
    eq.nodes_expanded = solver.nodes_expanded();
    return eq;
}

Cost price_of_anarchy(const Equilibrium& spe, const Equilibrium& coop) {
    Cost spe_total = spe.total();
    Cost coop_total = coop.total();
    if (coop_total.is_zero()) {
        if (spe_total.is_zero()) return Cost(1);
        throw InvalidInput("price of anarchy undefined: zero cooperative cost");
    }
    return spe_total / coop_total;
}

Cost price_of_anarchy(const Graph& g, RuleSet rules, std::uint64_t budget) {
    return price_of_anarchy(solve_exact(g, rules, budget), cooperative_optimum(g, rules, budget));
}

} // namespace sconn
