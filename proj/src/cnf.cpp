#include "pcp/cnf.hpp"

#include <cstdint>

namespace pcp {

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi) {
    if (phi.num_vars > 24)
        throw TooManyVariables("sat_bruteforce supports at most 24 variables, got " +
                               std::to_string(phi.num_vars));

    const uint32_t space = uint32_t{1} << phi.num_vars;
    for (uint32_t mask = 0; mask < space; ++mask) {
        bool ok = true;
        for (const auto& cl : phi.clauses) {
            bool sat = false;
            for (const Literal& l : cl)
                if (((mask >> l.var) & 1u) == static_cast<uint32_t>(l.positive)) {
                    sat = true;
                    break;
                }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> assignment(phi.num_vars);
            for (int v = 0; v < phi.num_vars; ++v) assignment[v] = (mask >> v) & 1u;
            return assignment;
        }
    }
    return std::nullopt;
}

} // namespace pcp
