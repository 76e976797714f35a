#include "pcp/reductions.hpp"

#include <algorithm>
#include <array>

namespace pcp {

const char* gadget_role_name(GadgetRole role) {
    switch (role) {
        case GadgetRole::AnchorG: return "anchor-g";
        case GadgetRole::AnchorR: return "anchor-r";
        case GadgetRole::LiteralLayer: return "literal-layer";
        case GadgetRole::MiddleLayer: return "middle-layer";
        case GadgetRole::ConflictLayer: return "conflict-layer";
        case GadgetRole::Clique: return "clique";
        case GadgetRole::Dummy: return "dummy";
        case GadgetRole::Copy: return "copy";
        case GadgetRole::Original: return "original";
    }
    return "?";
}

ReductionOutput reduce_3sat_to_pcp22(const CnfFormula& phi) {
    const int m = static_cast<int>(phi.clauses.size());
    std::vector<std::array<Literal, 3>> clauses(m);
    for (int t = 0; t < m; ++t) {
        const auto& cl = phi.clauses[t];
        if (cl.size() > 3)
            throw ClauseTooWide("clause " + std::to_string(t) + " has width " +
                                std::to_string(cl.size()) + " > 3");
        if (cl.empty()) throw ClauseTooWide("clause " + std::to_string(t) + " is empty");
        for (int i = 0; i < 3; ++i)
            clauses[t][i] = cl[std::min<size_t>(i, cl.size() - 1)]; // pad by repetition
    }

    // canonical ids: g=0, r=1, then per clause t: l1 l2 l3 m1 m2 m3 c1 c2 c3
    const Vertex g = 0, r = 1;
    auto lit_v = [](int t, int i) { return 2 + 9 * t + i; };
    auto mid_v = [](int t, int i) { return 2 + 9 * t + 3 + i; };
    auto con_v = [](int t, int i) { return 2 + 9 * t + 6 + i; };

    ReductionOutput out;
    out.provenance.resize(2 + 9 * m);
    out.provenance[g] = {GadgetRole::AnchorG};
    out.provenance[r] = {GadgetRole::AnchorR};

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.emplace_back(g, r);
    std::vector<std::vector<Vertex>> parts{{g}, {r}};

    for (int t = 0; t < m; ++t) {
        for (int i = 0; i < 3; ++i) {
            out.provenance[lit_v(t, i)] = {GadgetRole::LiteralLayer, t, i};
            out.provenance[mid_v(t, i)] = {GadgetRole::MiddleLayer, t, i};
            out.provenance[con_v(t, i)] = {GadgetRole::ConflictLayer, t, i};
            edges.emplace_back(lit_v(t, i), mid_v(t, i));
            edges.emplace_back(mid_v(t, i), g);
        }
        edges.emplace_back(con_v(t, 0), con_v(t, 1));
        edges.emplace_back(con_v(t, 0), con_v(t, 2));
        edges.emplace_back(con_v(t, 1), con_v(t, 2));
        for (int i = 0; i < 3; ++i) parts.push_back({lit_v(t, i)});
        for (int i = 0; i < 3; ++i) parts.push_back({mid_v(t, i), con_v(t, i)});
    }

    // contrary literal occurrences, across all clause pairs including t1 == t2
    for (int t1 = 0; t1 < m; ++t1)
        for (int i = 0; i < 3; ++i)
            for (int t2 = t1; t2 < m; ++t2)
                for (int j = (t2 == t1 ? i + 1 : 0); j < 3; ++j)
                    if (clauses[t1][i] == negated(clauses[t2][j]))
                        edges.emplace_back(lit_v(t1, i), lit_v(t2, j));

    out.instance = validate_instance(2 + 9 * m, 2, std::move(edges), std::move(parts));
    return out;
}

ReductionOutput reduce_qsat_to_pcpk1(const CnfFormula& phi, int q) {
    ReductionOutput out;
    std::vector<std::vector<Vertex>> parts;
    std::vector<Literal> lits; // literal of each generated vertex
    for (size_t t = 0; t < phi.clauses.size(); ++t) {
        const auto& cl = phi.clauses[t];
        if (static_cast<int>(cl.size()) > q)
            throw ClauseTooWide("clause " + std::to_string(t) + " has width " +
                                std::to_string(cl.size()) + " > " + std::to_string(q));
        if (cl.empty()) throw ClauseTooWide("clause " + std::to_string(t) + " is empty");
        std::vector<Vertex> part;
        for (size_t i = 0; i < cl.size(); ++i) {
            part.push_back(static_cast<Vertex>(lits.size()));
            out.provenance.push_back(
                {GadgetRole::LiteralLayer, static_cast<int>(t), static_cast<int>(i)});
            lits.push_back(cl[i]);
        }
        parts.push_back(std::move(part));
    }

    const int n = static_cast<int>(lits.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (lits[u] == negated(lits[v])) edges.emplace_back(u, v);

    out.instance = validate_instance(n, 1, std::move(edges), std::move(parts));
    return out;
}

ReductionOutput reduce_is_to_pcp(int n, const std::vector<std::pair<Vertex, Vertex>>& graph_edges,
                                 int k_target_size, int k) {
    if (k < 1 || k_target_size < 1)
        throw BadTarget("independent-set reduction needs k >= 1 and k_I >= 1");

    const int copies = k_target_size;
    const int clique = k - 1; // empty when k = 1
    const int total = copies * n + clique;

    AdjacencyMatrix adj(std::max(n, 1));
    for (auto [u, v] : graph_edges) adj.add_edge(u, v);

    ReductionOutput out;
    out.provenance.resize(total);
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto copy_v = [n](int c, Vertex v) { return c * n + v; };
    for (int c = 0; c < copies; ++c) {
        std::vector<Vertex> part;
        for (Vertex v = 0; v < n; ++v) {
            part.push_back(copy_v(c, v));
            out.provenance[copy_v(c, v)] = {GadgetRole::Copy, -1, -1, c, v};
        }
        parts.push_back(std::move(part));
        for (auto [u, v] : graph_edges) edges.emplace_back(copy_v(c, u), copy_v(c, v));
    }
    // cross-copy: equal or adjacent source vertices conflict
    for (int c1 = 0; c1 < copies; ++c1)
        for (int c2 = c1 + 1; c2 < copies; ++c2)
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u == v || adj.adjacent(u, v))
                        edges.emplace_back(copy_v(c1, u), copy_v(c2, v));

    const Vertex clique_base = copies * n;
    for (int i = 0; i < clique; ++i) {
        out.provenance[clique_base + i] = {GadgetRole::Clique, -1, -1, -1, i};
        parts.push_back({clique_base + i});
        for (int j = i + 1; j < clique; ++j)
            edges.emplace_back(clique_base + i, clique_base + j);
        for (Vertex v = 0; v < copies * n; ++v) edges.emplace_back(clique_base + i, v);
    }

    out.instance = validate_instance(total, k, std::move(edges), std::move(parts));
    return out;
}

ReductionOutput pad_instance(const PcpInstance& inst, int q_target, int k_target) {
    if (q_target < 2 || k_target < 2)
        throw BadTarget("padding requires q' >= 2 and k' >= 2");

    const int clique = k_target - 2;
    const int total = inst.n + clique + q_target;

    ReductionOutput out;
    out.provenance.resize(total);
    for (Vertex v = 0; v < inst.n; ++v)
        out.provenance[v] = {GadgetRole::Original, -1, -1, -1, v};

    auto edges = inst.edges;
    auto parts = inst.parts;

    const Vertex clique_base = inst.n;
    for (int i = 0; i < clique; ++i) {
        out.provenance[clique_base + i] = {GadgetRole::Clique, -1, -1, -1, i};
        parts.push_back({clique_base + i});
        for (int j = i + 1; j < clique; ++j)
            edges.emplace_back(clique_base + i, clique_base + j);
        for (Vertex v = 0; v < inst.n; ++v) edges.emplace_back(clique_base + i, v);
    }

    const Vertex dummy_base = inst.n + clique;
    std::vector<Vertex> dummy_part;
    for (int i = 0; i < q_target; ++i) {
        out.provenance[dummy_base + i] = {GadgetRole::Dummy, -1, -1, -1, i};
        dummy_part.push_back(dummy_base + i);
    }
    parts.push_back(std::move(dummy_part));

    out.instance = validate_instance(total, k_target, std::move(edges), std::move(parts));
    return out;
}

} // namespace pcp
