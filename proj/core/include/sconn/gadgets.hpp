#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sconn/graph.hpp"
#include "sconn/qbf.hpp"

namespace sconn {

// Generators for the hardness-reduction instances and the random families
// used by the verification suites. All generators are deterministic
// functions of their parameters and emit instance files through
// Graph::serialize with the derived constants echoed as header comments.

struct GeneratedInstance {
    Graph graph;
    std::vector<std::string> header; // provenance comments for serialize()
};

// Bipartite gadget for quantified <=4-SAT with exactly one universal literal
// per clause. Edge costs: c(w_j,z_j) = c(z_j,w_j) = 1, c(z_j,q_{j,B}) = 21/10,
// everything else eps = 1/(2n+7) < 1/(2n+6). When simple_path_variant is set,
// the w_j/z_j apparatus is replaced by the cost-1 pair (q_{j,A},q_{j,B}),
// (q_{j,B},q_{j,A}) and the instance carries rules r3.
GeneratedInstance gen_qsat_bipartite(const QuantifiedFormula& f, bool simple_path_variant);

// Undirected input graph of a Vertex Cover instance, vertices 1..n.
struct VertexCoverInstance {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct VertexCoverOptions {
    // Splits every edge through a fresh midpoint at half cost, which makes
    // the DAG bipartite.
    bool bipartite_split = false;
    // The construction text assigns cost 2 to (gamma,eta) and (lambda,mu)
    // while the figure and the case analysis use 3; 3 is the default.
    bool text_costs = false;
};

// Acyclic gadget for Vertex Cover with budget k >= 3. The instance sizes
// satisfy |V| = 6+(k+1)+n+17m and |E| = 5+k+2n+n(n-1)/2+21m, and every edge
// without an explicit cost carries eps = 1/|E| exactly.
GeneratedInstance gen_vertex_cover_dag(const VertexCoverInstance& h, int k,
                                       const VertexCoverOptions& opts = {});

struct ThreePartitionOptions {
    // Extra vertices on the two spines; A's spine stays one edge longer than
    // B's so that B chooses first in the synchronized position.
    int b_spine_extra = 0;
    // Padding 2-cycles at b5; <0 derives ceil(M/4 + (5/2)*max item).
    int padding_cycles = -1;
};

// Cactus gadget for 3-Partition: items c~_1..c~_3n with sum n*K~ become
// cycles of length c_i = M + 2*c~_i at A's hub against (n-1) cycles of
// length K = 3M + 2*K~ at B's hub, with M = 2n*K~.
GeneratedInstance gen_3partition_cactus(const std::vector<std::int64_t>& items,
                                        const ThreePartitionOptions& opts = {});

// Seeded random instance families; every emitted instance passes its
// structural validator and admits a feasible play.
Graph gen_random_cactus(int n, std::uint64_t seed);
Graph gen_random_tree(int n, std::uint64_t seed);
Graph gen_random_dag(int n, std::uint64_t seed);

// Worked examples 1-3. M parametrizes examples 2 (M > 2) and 3 (M >= 1).
Graph gen_example(int which, Cost m_value = Cost(10));

} // namespace sconn
