#include "sconn/qbf.hpp"

#include <algorithm>
#include <sstream>

namespace sconn {

QuantifiedFormula QuantifiedFormula::parse(std::string_view text) {
    std::string s(text);
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("formula needs ':' between prefix and matrix");
    std::istringstream prefix(s.substr(0, colon));
    QuantifiedFormula f;
    std::string tok;
    int next_var = 1;
    while (prefix >> tok) {
        bool existential;
        if (tok == "E" || tok == "e")
            existential = true;
        else if (tok == "A" || tok == "a")
            existential = false;
        else
            throw ParseError("expected quantifier E or A, got '" + tok + "'");
        std::string var;
        if (!(prefix >> var)) throw ParseError("quantifier without variable");
        if (var != "x" + std::to_string(next_var))
            throw ParseError("variables must be named x1..xn in order, got '" + var + "'");
        bool should_be_existential = !QuantifiedFormula::universal(next_var);
        if (existential != should_be_existential)
            throw ParseError("prefix must alternate E/A starting with E");
        ++next_var;
    }
    f.num_vars = next_var - 1;

    std::string matrix = s.substr(colon + 1);
    std::vector<Literal> clause;
    bool in_clause = false;
    auto flush_literal = [&](std::string lit) {
        bool neg = false;
        while (!lit.empty() && (lit[0] == '!' || lit[0] == '~')) {
            neg = !neg;
            lit = lit.substr(1);
        }
        if (lit.size() < 2 || lit[0] != 'x') throw ParseError("bad literal '" + lit + "'");
        int var = 0;
        try {
            var = std::stoi(lit.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad literal '" + lit + "'");
        }
        if (var < 1 || var > f.num_vars) throw ParseError("literal outside prefix: '" + lit + "'");
        clause.push_back({var, neg});
    };

    std::string current;
    for (char c : matrix) {
        if (c == '(') {
            if (in_clause) throw ParseError("nested '('");
            in_clause = true;
            clause.clear();
        } else if (c == ')') {
            if (!in_clause) throw ParseError("unmatched ')'");
            if (!current.empty()) {
                flush_literal(current);
                current.clear();
            }
            if (clause.empty()) throw ParseError("empty clause");
            f.clauses.push_back(clause);
            in_clause = false;
        } else if (c == '|' || c == ' ' || c == '\t' || c == '\n') {
            if (!current.empty()) {
                flush_literal(current);
                current.clear();
            }
        } else if (c == '&') {
            if (in_clause) throw ParseError("'&' inside clause");
        } else {
            if (!in_clause) throw ParseError("literal outside clause");
            current += c;
        }
    }
    if (in_clause) throw ParseError("unterminated clause");
    return f;
}

std::string QuantifiedFormula::str() const {
    std::ostringstream out;
    for (int v = 1; v <= num_vars; ++v)
        out << (universal(v) ? "A x" : "E x") << v << " ";
    out << ":";
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        out << " (";
        for (std::size_t i = 0; i < clauses[j].size(); ++i) {
            if (i) out << " | ";
            if (clauses[j][i].negated) out << "!";
            out << "x" << clauses[j][i].var;
        }
        out << ")";
        if (j + 1 < clauses.size()) out << " &";
    }
    return out.str();
}

namespace {

bool eval_rec(const QuantifiedFormula& f, int var, std::vector<char>& assignment) {
    if (var > f.num_vars) {
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (const Literal& lit : clause)
                if (assignment[lit.var] != lit.negated) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
    bool universal = QuantifiedFormula::universal(var);
    for (int value = 0; value < 2; ++value) {
        assignment[var] = (char)value;
        bool sub = eval_rec(f, var + 1, assignment);
        if (universal && !sub) return false;
        if (!universal && sub) return true;
    }
    return universal;
}

} // namespace

bool evaluate_formula(const QuantifiedFormula& f) {
    if (f.num_vars > 24) throw InvalidInput("formula too large for exhaustive evaluation");
    std::vector<char> assignment(f.num_vars + 1, 0);
    return eval_rec(f, 1, assignment);
}

QuantifiedFormula qsat_normalize(const QuantifiedFormula& f) {
    if (f.num_vars % 2 != 0)
        throw InvalidInput("prefix must end with a universal quantifier");
    for (const auto& clause : f.clauses) {
        if (clause.size() > 3) throw InvalidInput("clause with more than three literals");
        int universals = 0;
        for (const Literal& lit : clause)
            if (QuantifiedFormula::universal(lit.var)) ++universals;
        if (universals > 1) throw InvalidInput("clause with two universal literals");
    }

    QuantifiedFormula out;
    out.num_vars = f.num_vars;
    for (const auto& clause : f.clauses) {
        bool all_existential = std::none_of(clause.begin(), clause.end(), [](const Literal& lit) {
            return QuantifiedFormula::universal(lit.var);
        });
        if (!all_existential) {
            out.clauses.push_back(clause);
            continue;
        }
        out.num_vars += 2; // fresh dummy existential e_j, fresh universal u_j
        int u = out.num_vars;
        auto with_u = clause;
        with_u.push_back({u, false});
        auto with_not_u = clause;
        with_not_u.push_back({u, true});
        out.clauses.push_back(with_u);
        out.clauses.push_back(with_not_u);
    }
    return out;
}

bool is_normalized(const QuantifiedFormula& f) {
    if (f.num_vars % 2 != 0) return false;
    for (const auto& clause : f.clauses) {
        if (clause.size() > 4) return false;
        int universals = 0;
        for (const Literal& lit : clause)
            if (QuantifiedFormula::universal(lit.var)) ++universals;
        if (universals != 1) return false;
    }
    return true;
}

} // namespace sconn
