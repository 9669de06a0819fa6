#include "sconn/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sconn {

class GraphBuilder {
public:
    static Graph make(std::vector<std::string> tokens, std::vector<Edge> edges, int s, int t,
                      RuleSet rules) {
        Graph g;
        g.tokens_ = std::move(tokens);
        g.edges_ = std::move(edges);
        g.s_ = s;
        g.t_ = t;
        g.rules_ = rules;
        g.out_.assign(g.tokens_.size(), {});
        for (const Edge& e : g.edges_) g.out_[e.tail].push_back(e.id);
        return g;
    }
};

namespace {

struct RawEdge {
    std::string tail;
    std::string head;
    Cost cost;
    int input_pos;
};

Graph assemble(const std::vector<RawEdge>& raw, const std::string& s_token,
               const std::string& t_token, RuleSet rules) {
    std::vector<std::string> tokens;
    tokens.push_back(s_token);
    tokens.push_back(t_token);
    for (const auto& e : raw) {
        tokens.push_back(e.tail);
        tokens.push_back(e.head);
    }
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());

    auto index_of = [&](const std::string& tok) {
        return (int)(std::lower_bound(tokens.begin(), tokens.end(), tok) - tokens.begin());
    };

    struct IndexedEdge {
        int tail, head;
        Cost cost;
        int input_pos;
    };
    std::vector<IndexedEdge> indexed;
    indexed.reserve(raw.size());
    for (const auto& e : raw)
        indexed.push_back({index_of(e.tail), index_of(e.head), e.cost, e.input_pos});
    std::sort(indexed.begin(), indexed.end(), [](const IndexedEdge& a, const IndexedEdge& b) {
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.head != b.head) return a.head < b.head;
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.input_pos < b.input_pos;
    });

    std::vector<Edge> edges;
    edges.reserve(indexed.size());
    for (int id = 0; id < (int)indexed.size(); ++id)
        edges.push_back({id, indexed[id].tail, indexed[id].head, indexed[id].cost});

    return GraphBuilder::make(std::move(tokens), std::move(edges), index_of(s_token),
                              index_of(t_token), rules);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> parts;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) parts.push_back(tok);
    return parts;
}

} // namespace

Graph Graph::parse_instance(std::istream& in) {
    std::vector<RawEdge> raw;
    std::string s_token, t_token;
    bool have_start = false;
    RuleSet rules;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto parts = split_ws(line);
        if (parts.empty()) continue;

        if (parts[0] == "start") {
            if (parts.size() != 3) fail("start expects two vertex tokens");
            if (have_start) fail("duplicate start directive");
            have_start = true;
            s_token = parts[1];
            t_token = parts[2];
        } else if (parts[0] == "rules") {
            if (parts.size() != 2 || (parts[1] != "r2" && parts[1] != "r3"))
                fail("rules expects r2 or r3");
            rules.simple_paths = parts[1] == "r3";
        } else if (parts[0] == "edge") {
            if (parts.size() != 4) fail("edge expects <u> <v> <cost>");
            Cost c;
            try {
                c = Cost::parse(parts[3]);
            } catch (const std::exception&) {
                fail("bad cost literal '" + parts[3] + "'");
            }
            if (c.is_negative()) fail("negative cost");
            if (parts[1] == parts[2]) fail("self-loop");
            raw.push_back({parts[1], parts[2], c, (int)raw.size()});
        } else {
            fail("unknown directive '" + parts[0] + "'");
        }
    }

    if (!have_start) throw ParseError("missing start directive");
    return assemble(raw, s_token, t_token, rules);
}

Graph Graph::parse_instance(std::string_view text) {
    std::istringstream iss{std::string(text)};
    return parse_instance(iss);
}

Graph Graph::build(const std::vector<EdgeSpec>& edges, const std::string& s_token,
                   const std::string& t_token, RuleSet rules) {
    std::vector<RawEdge> raw;
    raw.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.cost.is_negative()) throw InvalidInput("negative cost");
        if (e.tail == e.head) throw InvalidInput("self-loop");
        raw.push_back({e.tail, e.head, e.cost, (int)raw.size()});
    }
    return assemble(raw, s_token, t_token, rules);
}

int Graph::find_vertex(std::string_view token) const {
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end() || std::string_view(*it) != token) return -1;
    return (int)(it - tokens_.begin());
}

std::string Graph::serialize(const std::vector<std::string>& header_comments) const {
    std::ostringstream out;
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "start " << tokens_[s_] << " " << tokens_[t_] << "\n";
    if (rules_.simple_paths) out << "rules r3\n";
    for (const Edge& e : edges_)
        out << "edge " << tokens_[e.tail] << " " << tokens_[e.head] << " "
            << e.cost.decimal_or_fraction() << "\n";
    return out.str();
}

std::string Graph::export_dot() const {
    auto quoted = [](const std::string& tok) {
        std::string q = "\"";
        for (char c : tok) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        q += '"';
        return q;
    };
    std::ostringstream out;
    out << "digraph connection_game {\n";
    for (int v = 0; v < vertex_count(); ++v) {
        out << "  " << quoted(tokens_[v]);
        if (v == s_)
            out << " [shape=doublecircle, color=blue]";
        else if (v == t_)
            out << " [shape=doublecircle, color=red]";
        out << ";\n";
    }
    for (const Edge& e : edges_)
        out << "  " << quoted(tokens_[e.tail]) << " -> " << quoted(tokens_[e.head]) << " [label=\""
            << e.cost.decimal_or_fraction() << "\"];\n";
    out << "}\n";
    return out.str();
}

Graph Graph::scaled(const Cost& lambda) const {
    if (lambda.is_negative() || lambda.is_zero())
        throw InvalidInput("scale factor must be positive");
    std::vector<EdgeSpec> specs;
    specs.reserve(edges_.size());
    for (const Edge& e : edges_) specs.push_back({tokens_[e.tail], tokens_[e.head], e.cost * lambda});
    return build(specs, tokens_[s_], tokens_[t_], rules_);
}

} // namespace sconn
