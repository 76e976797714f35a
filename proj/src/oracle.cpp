#include "pcp/oracle.hpp"

#include <algorithm>

namespace pcp {

bool color_graph_backtracking(const AdjacencyMatrix& adj, int k, std::vector<int>& colors) {
    const int n = adj.size();
    colors.assign(n, 0);
    if (n == 0) return true;
    if (k < 1) return false;

    int v = 0;
    while (true) {
        const int limit = std::min(v + 1, k);
        int c = colors[v] + 1;
        for (; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (colors[u] == c && adj.adjacent(u, v)) { ok = false; break; }
            if (ok) break;
        }
        if (c <= limit) {
            colors[v] = c;
            if (++v == n) return true;
        } else {
            colors[v] = 0;
            if (--v < 0) return false;
        }
    }
}

uint64_t selection_space_size(const PcpInstance& inst) {
    uint64_t prod = 1;
    for (const auto& part : inst.parts) {
        if (prod > (uint64_t{1} << 63) / part.size()) return uint64_t{1} << 63;
        prod *= part.size();
    }
    return prod;
}

Solution oracle_solve(const PcpInstance& inst, uint64_t cap) {
    const uint64_t space = selection_space_size(inst);
    if (space > cap)
        throw CapExceeded("selection space " + std::to_string(space) +
                          " exceeds cap " + std::to_string(cap));

    const int p = inst.num_parts();
    const int k = std::min(inst.k, p); // p vertices never need more than p colors
    AdjacencyMatrix full = inst.adjacency();

    Solution sol;
    sol.solver_tag = "oracle";

    Selection sel;
    sel.chosen.assign(p, 0);
    std::vector<Vertex> chosen(p);
    std::vector<int> colors;

    while (true) {
        for (int i = 0; i < p; ++i) chosen[i] = inst.parts[i][sel.chosen[i]];
        AdjacencyMatrix sub(p);
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (full.adjacent(chosen[i], chosen[j])) sub.add_edge(i, j);

        if (color_graph_backtracking(sub, k, colors)) {
            Coloring col;
            for (int i = 0; i < p; ++i) col.assignment.emplace_back(chosen[i], colors[i]);
            sol.yes = true;
            sol.certificate = {sel, col};
            return sol;
        }

        // next selection, mixed-radix
        int i = 0;
        while (i < p && ++sel.chosen[i] == static_cast<int>(inst.parts[i].size())) {
            sel.chosen[i] = 0;
            ++i;
        }
        if (i == p) break;
    }
    sol.yes = false;
    return sol;
}

} // namespace pcp
