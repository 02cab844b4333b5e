#pragma once

#include <optional>
#include <vector>

namespace orthoext {

// Binary clauses over boolean variables; literal encoding: variable index
// with a negation flag. Solved via the implication graph and its strongly
// connected components (linear in the formula size).
struct TwoSatFormula {
    int variables = 0;
    struct Literal {
        int var;
        bool negated;
    };
    std::vector<std::pair<Literal, Literal>> clauses;  // disjunctions
    std::vector<Literal> units;

    void add_unit(int var, bool negated) { units.push_back({var, negated}); }
    void add_clause(int var_a, bool neg_a, int var_b, bool neg_b) {
        clauses.push_back({{var_a, neg_a}, {var_b, neg_b}});
    }
};

std::optional<std::vector<bool>> solve_two_sat(const TwoSatFormula& f);

}  // namespace orthoext
