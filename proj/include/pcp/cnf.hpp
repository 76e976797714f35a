#ifndef PCP_CNF_HPP
#define PCP_CNF_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcp {

/// Variable id (0-based) plus polarity (true = positive).
struct Literal {
    int var = 0;
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

inline Literal negated(Literal l) { return {l.var, !l.positive}; }

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;
};

class TooManyVariables : public std::runtime_error {
public:
    explicit TooManyVariables(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive truth-table scan, variable count <= 24. Returns an assignment
/// on SAT (all-false for the empty formula), nullopt on UNSAT.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi);

} // namespace pcp

#endif
