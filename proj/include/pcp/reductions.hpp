#ifndef PCP_REDUCTIONS_HPP
#define PCP_REDUCTIONS_HPP

#include "pcp/cnf.hpp"
#include "pcp/instance.hpp"

namespace pcp {

class ClauseTooWide : public std::runtime_error {
public:
    explicit ClauseTooWide(const std::string& what) : std::runtime_error(what) {}
};

class BadTarget : public std::runtime_error {
public:
    explicit BadTarget(const std::string& what) : std::runtime_error(what) {}
};

enum class GadgetRole {
    AnchorG,
    AnchorR,
    LiteralLayer,
    MiddleLayer,
    ConflictLayer,
    Clique,
    Dummy,
    Copy,
    Original,
};

struct VertexProvenance {
    GadgetRole role;
    int clause = -1;        // clause index, for sat reductions
    int position = -1;      // literal position within the clause
    int copy = -1;          // copy index, for the IS reduction
    int source_vertex = -1; // vertex in the source graph / instance
};

struct ReductionOutput {
    PcpInstance instance;
    std::vector<VertexProvenance> provenance; // one entry per generated vertex
};

const char* gadget_role_name(GadgetRole role);

/// 3-SAT -> PCP with q=2, k=2. Per clause: a literal layer (3 singleton
/// parts), a middle layer and a conflict triangle paired into 3 two-vertex
/// parts, plus two global anchor vertices g and r. Clauses shorter than 3
/// are padded by repeating their last literal; wider clauses are rejected.
/// Output: 9m+2 vertices, 6m+2 parts.
ReductionOutput reduce_3sat_to_pcp22(const CnfFormula& phi);

/// q-SAT -> PCP with k=1: a vertex per literal occurrence, a part per
/// clause, an edge per pair of contrary occurrences.
ReductionOutput reduce_qsat_to_pcpk1(const CnfFormula& phi, int q);

/// Independent Set -> PCP: k_I copies of g (each one part), cross-copy
/// edges between equal-or-adjacent vertices, and a (k-1)-clique of
/// singleton parts joined completely to all copies. p = k_I + k - 1.
ReductionOutput reduce_is_to_pcp(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                 int k_target_size, int k);

/// PCP(q<=2, k=2) -> PCP(q', k'): joins a (k'-2)-clique of singleton parts
/// to every original vertex and adds one part of q' isolated dummies.
/// p' = p + k' - 1; the answer is preserved.
ReductionOutput pad_instance(const PcpInstance& inst, int q_target, int k_target);

} // namespace pcp

#endif
