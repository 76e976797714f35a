#ifndef PCP_ORACLE_HPP
#define PCP_ORACLE_HPP

#include "pcp/instance.hpp"

#include <cstdint>

namespace pcp {

inline constexpr uint64_t kDefaultOracleCap = uint64_t{1} << 20;

/// Backtracking k-coloring of a small graph with color-symmetry breaking:
/// vertex i may only use colors 1..min(i+1, k). Fills `colors` (1-based
/// values) and returns true on success.
bool color_graph_backtracking(const AdjacencyMatrix& adj, int k, std::vector<int>& colors);

/// Exhaustive solver: enumerates all selections in mixed-radix order and
/// checks k-colorability of each induced graph. Throws CapExceeded when
/// prod |V_i| > cap.
Solution oracle_solve(const PcpInstance& inst, uint64_t cap = kDefaultOracleCap);

/// prod |V_i|, saturating at 2^63.
uint64_t selection_space_size(const PcpInstance& inst);

} // namespace pcp

#endif
