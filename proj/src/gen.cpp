#include "pcp/gen.hpp"

#include <numeric>

namespace pcp {

PcpInstance gen_instance(int n, int p, int q, double edge_prob, int k, uint64_t seed) {
    if (p < 1 || q < 1 || n < p || n > static_cast<long>(p) * q)
        throw InfeasibleShape("need p >= 1, q >= 1 and p <= n <= p*q");

    SplitMix64 rng(seed);

    // balanced composition: start at all-ones, sprinkle the surplus
    // uniformly over parts still below q
    std::vector<int> sizes(p, 1);
    std::vector<int> open(p);
    std::iota(open.begin(), open.end(), 0);
    for (int extra = n - p; extra > 0; --extra) {
        const size_t pick = static_cast<size_t>(rng.next_below(open.size()));
        const int part = open[pick];
        if (++sizes[part] == q) {
            open[pick] = open.back();
            open.pop_back();
        }
    }

    std::vector<std::vector<Vertex>> parts(p);
    Vertex next = 0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < sizes[i]; ++j) parts[i].push_back(next++);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_double() < edge_prob) edges.emplace_back(u, v);

    return validate_instance(n, k, std::move(edges), std::move(parts));
}

} // namespace pcp
