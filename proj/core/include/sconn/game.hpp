#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sconn/bitset.hpp"
#include "sconn/graph.hpp"

namespace sconn {

// Full game position. Player A walks from s, player B from t, strictly
// alternating with A first. The game is over as soon as one player stands on
// a vertex the other has already visited; homebases count as visited from
// move zero, so s == t ends the game immediately with costs (0,0).
struct GameState {
    int pos_a;
    int pos_b;
    bool a_to_move;
    std::vector<int> path_a; // vertex sequence, starts at s
    std::vector<int> path_b; // vertex sequence, starts at t
    std::vector<int> edges_a;
    std::vector<int> edges_b;
    Bitset used_edges; // R2 accounting, shared between the players
    Bitset visited_a;  // R3 accounting and meeting detection
    Bitset visited_b;
    int meeting = -1;

    bool terminal() const { return meeting != -1; }
};

GameState initial_state(const Graph& g, RuleSet rules);

// Outgoing edges of the mover's position satisfying R2 (and R3 when active),
// ascending edge id. Throws InvalidInput on terminal states.
std::vector<int> raw_moves(const GameState& state, const Graph& g, RuleSet rules);

// Moves a position forward. The move must be raw-legal; R1 legality is the
// caller's concern (see legal_moves). Throws InvalidInput("illegal move").
GameState apply_move(const GameState& state, const Graph& g, int edge_id);

// Canonical memoization key for a state: positions, turn and the consumed
// resources (used-edge set under R2, both visited sets under R3). States that
// agree on the key have identical feasible continuations.
struct StateKey {
    std::uint64_t prefix; // packs positions and turn
    Bitset resources;     // used edges (R2) or visited_a ++ visited_b (R3)

    bool operator==(const StateKey& o) const {
        return prefix == o.prefix && resources == o.resources;
    }
    std::uint64_t hash() const { return prefix * 0x9e3779b97f4a7c15ull ^ resources.hash(); }
};
StateKey state_key(const GameState& state, const Graph& g, RuleSet rules);

// Cooperative feasibility oracle realizing R1: true iff some strictly
// alternating completion, with every move raw-legal and neither player ever
// stuck before the end, reaches a meeting. Terminal states are feasible.
//
// A cache is confined to one FeasibilityOracle; independent instances may be
// used concurrently on shared graphs.
class FeasibilityOracle {
public:
    FeasibilityOracle(const Graph& g, RuleSet rules) : g_(g), rules_(rules) {}

    bool feasible(const GameState& state);
    std::uint64_t states_explored() const { return states_explored_; }

private:
    const Graph& g_;
    RuleSet rules_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<StateKey, bool>>> cache_;
    std::uint64_t states_explored_ = 0;
};

// One-shot convenience wrapper around FeasibilityOracle.
bool feasible(const GameState& state, const Graph& g, RuleSet rules);

// The subset of raw_moves whose successor satisfies feasible(); order kept.
std::vector<int> legal_moves(const GameState& state, const Graph& g, RuleSet rules);

// True iff at least one complete feasible play exists from the initial state.
bool feasibility_precheck(const Graph& g, RuleSet rules);

// Exact cost of a connected walk given as edge ids.
Cost play_cost(std::span<const int> edge_ids, const Graph& g);

// Exact cost of a walk given as vertex tokens; consecutive pairs are resolved
// to the cheapest parallel edge. Throws InvalidInput("disconnected walk").
Cost play_cost(const std::vector<std::string>& vertex_tokens, const Graph& g);

// Transcript: one line per move "<player> <tail> <head> <edge-id> <cost>",
// then "meet <vertex> <costA> <costB>" once the state is terminal.
std::string format_transcript(const GameState& state, const Graph& g);

} // namespace sconn
