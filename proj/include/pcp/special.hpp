#ifndef PCP_SPECIAL_HPP
#define PCP_SPECIAL_HPP

#include "pcp/cnf.hpp"
#include "pcp/exact.hpp"
#include "pcp/instance.hpp"
#include "pcp/oracle.hpp"

#include <optional>

namespace pcp {

class NotApplicable : public std::runtime_error {
public:
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

/// Width-1/2 clauses over p variables.
struct TwoSatFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;
};

/// q=1 fast path: k=1 reduces to "no edges", k=2 to bipartiteness.
Solution solve_q1(const PcpInstance& inst);

/// The 2-SAT encoding for q<=2, k=1: one variable per part, a vertex clause
/// per part (unit for singleton parts, tautological x v -x otherwise) and an
/// edge clause (-l_u v -l_v) per edge.
TwoSatFormula build_2sat(const PcpInstance& inst);

/// Implication-graph + SCC decision; returns an assignment on SAT.
std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f);

/// q<=2, k=1 fast path through build_2sat/solve_2sat; a satisfying
/// assignment selects exactly the vertices whose literal is true.
Solution solve_q2k1(const PcpInstance& inst);

struct DispatchConfig {
    uint64_t oracle_cap = kDefaultOracleCap; // prefer enumeration below this
    ExactOptions exact;
};

/// Routes to the cheapest applicable solver; solver_tag records the route.
Solution dispatch(const PcpInstance& inst, const DispatchConfig& cfg = {});

} // namespace pcp

#endif
