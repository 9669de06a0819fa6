#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sconn/game.hpp"
#include "sconn/graph.hpp"

namespace sconn {

// Remaining equilibrium cost of a state for both players. An infeasible
// state (no completion under R1) is marked, never encoded as a large number.
struct StateValue {
    bool infeasible = false;
    Cost cost_a;
    Cost cost_b;

    static StateValue infinite() { return {true, {}, {}}; }
    bool operator==(const StateValue& o) const {
        if (infeasible != o.infeasible) return false;
        return infeasible || (cost_a == o.cost_a && cost_b == o.cost_b);
    }
};

// The spe-conn outcome: both equilibrium paths, their exact costs and the
// meeting vertex.
struct Equilibrium {
    Cost cost_a;
    Cost cost_b;
    std::vector<int> path_a; // vertex ids, starts at s
    std::vector<int> path_b; // vertex ids, starts at t
    std::vector<int> edges_a;
    std::vector<int> edges_b;
    int meeting = -1;
    std::uint64_t nodes_expanded = 0;

    Cost total() const { return cost_a + cost_b; }
    std::vector<std::string> path_a_tokens(const Graph& g) const;
    std::vector<std::string> path_b_tokens(const Graph& g) const;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Memoized backward induction over the full game tree. The mover minimizes
// its own remaining cost, breaks ties optimistically (cheapest for the
// opponent) and residually by smallest edge id. Infeasible subtrees evaluate
// to the infinite marker, which realizes the R1 filter.
class ExactSolver {
public:
    ExactSolver(const Graph& g, RuleSet rules, std::uint64_t budget = kDefaultBudget)
        : g_(g), rules_(rules), budget_(budget) {}

    StateValue evaluate(const GameState& state);

    // Equilibrium from the initial state; throws Infeasible when no play exists.
    Equilibrium solve();

    // The best move of the state's mover under the equilibrium tie-break.
    // Requires a nonterminal feasible state.
    int best_move(const GameState& state);

    std::uint64_t nodes_expanded() const { return nodes_expanded_; }

private:
    const Graph& g_;
    RuleSet rules_;
    std::uint64_t budget_;
    std::uint64_t nodes_expanded_ = 0;
    std::unordered_map<std::uint64_t, std::vector<std::pair<StateKey, StateValue>>> memo_;
};

StateValue evaluate_state(const GameState& state, const Graph& g, RuleSet rules,
                          std::uint64_t budget = kDefaultBudget);
Equilibrium solve_exact(const Graph& g, RuleSet rules, std::uint64_t budget = kDefaultBudget);

// Over all complete feasible plays, a play minimizing total cost; ties by
// smaller cost for A, then lexicographically smallest move sequence by edge
// id. Throws Infeasible when no play exists.
Equilibrium cooperative_optimum(const Graph& g, RuleSet rules,
                                std::uint64_t budget = kDefaultBudget);

// spe-conn total divided by cooperative total, exact; 1 when both are zero.
Cost price_of_anarchy(const Graph& g, RuleSet rules, std::uint64_t budget = kDefaultBudget);
Cost price_of_anarchy(const Equilibrium& spe, const Equilibrium& coop);

} // namespace sconn
