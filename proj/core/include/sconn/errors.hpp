#pragma once

#include <stdexcept>
#include <string>

namespace sconn {

// Malformed instance files, formulas, or flag values.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on graph structure or generator parameters does not hold
// ("not a cactus", "k < 3", "non-integral cycle length", ...).
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// The instance admits no complete feasible play.
class Infeasible : public std::runtime_error {
public:
    Infeasible() : std::runtime_error("no feasible play") {}
};

// The exact solver exceeded its state-expansion budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

} // namespace sconn
