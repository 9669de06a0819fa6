#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sconn/errors.hpp"
#include "sconn/rational.hpp"

namespace sconn {

using Cost = Rational;

// R1 (joint meeting must stay possible, both players able to move every
// round) and R2 (each edge used at most once) are always in force.
// simple_paths additionally enforces R3: each vertex at most once per player.
struct RuleSet {
    bool simple_paths = false;
};

struct Edge {
    int id;
    int tail;
    int head;
    Cost cost;
};

// Directed multigraph with exact nonnegative edge costs and the two
// homebases s (player A) and t (player B).
//
// Vertex indices are assigned by sorting the distinct tokens, and edge ids
// by sorting edges on (tail, head, cost); a graph therefore does not depend
// on the declaration order in the instance file.
class Graph {
public:
    // Line-oriented instance format:
    //   # comment
    //   start <s-token> <t-token>        (required, exactly once)
    //   rules r2|r3                      (optional, default r2)
    //   edge <u> <v> <cost>              (cost: "3", "2.1" or "21/10")
    static Graph parse_instance(std::istream& in);
    static Graph parse_instance(std::string_view text);

    struct EdgeSpec {
        std::string tail;
        std::string head;
        Cost cost;
    };
    static Graph build(const std::vector<EdgeSpec>& edges, const std::string& s_token,
                       const std::string& t_token, RuleSet rules = {});

    int vertex_count() const { return (int)tokens_.size(); }
    int edge_count() const { return (int)edges_.size(); }

    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Outgoing edge ids of v in ascending id order.
    std::span<const int> out(int v) const { return out_[v]; }

    const std::string& token(int v) const { return tokens_[v]; }
    // -1 when no vertex carries the token.
    int find_vertex(std::string_view token) const;

    int s() const { return s_; }
    int t() const { return t_; }
    RuleSet rules() const { return rules_; }

    // Instance-file serialization; parse_instance is its exact inverse.
    std::string serialize(const std::vector<std::string>& header_comments = {}) const;

    // Deterministic Graphviz output, byte-identical for equal graphs.
    std::string export_dot() const;

    // Same structure with every cost multiplied by lambda (> 0).
    Graph scaled(const Cost& lambda) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> tokens_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    int s_ = -1;
    int t_ = -1;
    RuleSet rules_;
};

} // namespace sconn
