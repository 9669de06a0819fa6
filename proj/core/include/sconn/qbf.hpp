#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sconn/errors.hpp"

namespace sconn {

// Quantified boolean formula in prenex CNF with a strictly alternating
// prefix Ex1 Ax2 Ex3 Ax4 ...: odd variables are existential, even variables
// universal. Variables are numbered from 1.
struct Literal {
    int var;
    bool negated;

    bool operator==(const Literal&) const = default;
};

struct QuantifiedFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    static bool universal(int var) { return var % 2 == 0; }

    // Text form: "E x1 A x2 : (x1 | !x2) & (x2)". Variables must be named
    // x1..xn in prefix order and alternate E/A starting with E.
    static QuantifiedFormula parse(std::string_view text);
    std::string str() const;
};

// Exhaustive quantifier-tree evaluation; exponential, guarded to small n.
bool evaluate_formula(const QuantifiedFormula& f);

// The clause normalization behind the hardness gadgets: every all-existential
// clause C is replaced by C v u and C v !u for a fresh universal u (with a
// fresh dummy existential appended first to keep the prefix alternating).
// Input clauses must have at most 3 literals and at most one universal;
// output clauses have at most 4 literals and exactly one universal.
// The truth value is preserved.
QuantifiedFormula qsat_normalize(const QuantifiedFormula& f);

// Validates the gen_qsat_bipartite precondition.
bool is_normalized(const QuantifiedFormula& f);

} // namespace sconn
