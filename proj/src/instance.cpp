#include "pcp/instance.hpp"

#include <algorithm>
#include <set>

namespace pcp {

PcpInstance validate_instance(int n, int k,
                              std::vector<std::pair<Vertex, Vertex>> edges,
                              std::vector<std::vector<Vertex>> parts) {
    using Code = ValidationError::Code;
    if (n < 0 || k < 1)
        throw ValidationError(Code::BadId, k, "vertex count must be >= 0 and k >= 1");

    std::vector<int> seen(n, 0);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty())
            throw ValidationError(Code::EmptyPart, static_cast<long>(i),
                                  "part " + std::to_string(i) + " is empty");
        for (Vertex v : parts[i]) {
            if (v < 0 || v >= n)
                throw ValidationError(Code::BadId, v, "vertex id " + std::to_string(v) + " out of range");
            if (seen[v]++)
                throw ValidationError(Code::VertexInTwoParts, v,
                                      "vertex " + std::to_string(v) + " appears in two parts");
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v])
            throw ValidationError(Code::VertexInNoParts, v,
                                  "vertex " + std::to_string(v) + " is in no part");

    std::set<std::pair<Vertex, Vertex>> dedup;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n)
            throw ValidationError(Code::BadId, u, "edge endpoint " + std::to_string(u) + " out of range");
        if (v < 0 || v >= n)
            throw ValidationError(Code::BadId, v, "edge endpoint " + std::to_string(v) + " out of range");
        if (u == v)
            throw ValidationError(Code::SelfLoop, u, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!dedup.insert({u, v}).second)
            throw ValidationError(Code::DuplicateEdge, u,
                                  "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }

    PcpInstance inst;
    inst.n = n;
    inst.k = k;
    inst.edges.assign(dedup.begin(), dedup.end());
    inst.parts = std::move(parts);
    return inst;
}

bool verify_certificate(const PcpInstance& inst, const Selection& sel, const Coloring& col) {
    const int p = inst.num_parts();
    if (static_cast<int>(sel.chosen.size()) != p) return false;

    std::vector<int> color(inst.n, 0);
    std::vector<char> is_chosen(inst.n, 0);
    for (int i = 0; i < p; ++i) {
        int idx = sel.chosen[i];
        if (idx < 0 || idx >= static_cast<int>(inst.parts[i].size())) return false;
        is_chosen[inst.parts[i][idx]] = 1;
    }
    for (auto [v, c] : col.assignment) {
        if (v < 0 || v >= inst.n || !is_chosen[v]) return false;
        if (c < 1 || c > inst.k) return false;
        color[v] = c;
    }
    for (Vertex v = 0; v < inst.n; ++v)
        if (is_chosen[v] && color[v] == 0) return false;
    for (auto [u, v] : inst.edges)
        if (is_chosen[u] && is_chosen[v] && color[u] == color[v]) return false;
    return true;
}

AdjacencyMatrix induced_selection_graph(const PcpInstance& inst, const Selection& sel) {
    const int p = inst.num_parts();
    AdjacencyMatrix full = inst.adjacency();
    AdjacencyMatrix sub(p);
    std::vector<Vertex> chosen(p);
    for (int i = 0; i < p; ++i) chosen[i] = sel.vertex_in(inst, i);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (full.adjacent(chosen[i], chosen[j])) sub.add_edge(i, j);
    return sub;
}

} // namespace pcp
