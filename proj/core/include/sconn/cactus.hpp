#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sconn/analysis.hpp"
#include "sconn/graph.hpp"
#include "sconn/solver.hpp"

namespace sconn {

// O(n^2) dynamic program for the game restricted to simple paths (R3) on
// cactus graphs. Cost_A(a,b) / Cost_B(a,b) hold the remaining equilibrium
// costs with player A at a, B at b and A to move; rows are processed in
// reverse topological order of A's acyclic edge set E' and written once.
struct CactusOptions {
    // Normally the solver swaps the player roles exactly when the
    // exceptional two-way cycle configuration exists on A's side; the
    // override forces one orientation (used by the verification suites).
    enum class Orientation { kAuto, kNormal, kSwapped };
    Orientation orientation = Orientation::kAuto;

    // Keep every table row alive and produce the textual dump.
    bool want_tables = false;
};

struct CactusResult {
    Equilibrium equilibrium;
    bool role_swapped = false;
    // "cost <a> <b> <costA|inf> <costB|inf>" rows when want_tables is set.
    std::vector<std::string> table_dump;
};

// True iff some cycle in A's reachable region is traversable in both
// directions from its entry vertex and player B can reach a branch vertex
// without going through the entry: the configuration under which the meeting
// point may fall outside M(a) and the roles must be exchanged.
bool role_swap_needed(const Graph& g);

CactusResult solve_cactus_r3_full(const Graph& g, const CactusOptions& opts = {});
Equilibrium solve_cactus_r3(const Graph& g);

// Linear-time solver for trees: the meeting vertex is forced by the edge
// orientations along the unique undirected s-t path; the early arriver walks
// a minimum-cost overshoot of the exact required length beyond it.
Equilibrium solve_tree(const Graph& g);

// Engine dispatch used by the command line: trees first, then the cactus DP
// when R3 is active, exact search otherwise.
enum class Engine { kAuto, kExact, kCactus, kTree };
struct SolveOutcome {
    Equilibrium equilibrium;
    Engine used;
};
SolveOutcome solve_dispatch(const Graph& g, RuleSet rules, Engine engine,
                            std::uint64_t budget = kDefaultBudget);

} // namespace sconn
