#ifndef PCP_IO_HPP
#define PCP_IO_HPP

#include "pcp/cnf.hpp"
#include "pcp/instance.hpp"
#include "pcp/reductions.hpp"

#include <cstdint>
#include <string>

namespace pcp {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Instance files are DIMACS-style: a header `p pcp <n> <p> <k>`, comment
// lines starting with `c`, one `v <vertex> <part>` line per vertex and one
// `e <u> <v>` line per edge. Ids are 1-based in files, 0-based in memory.

PcpInstance parse_instance(const std::string& text);
std::string serialize_instance(const PcpInstance& inst);

/// DIMACS cnf: `p cnf <vars> <clauses>`, clauses as 0-terminated signed ints.
CnfFormula parse_cnf(const std::string& text);
std::string serialize_cnf(const CnfFormula& phi);

/// Edge list, one `<u> <v>` pair per 1-based line; an optional leading
/// `p edge <n> <m>` header pins the vertex count (otherwise the max id).
std::pair<int, std::vector<std::pair<Vertex, Vertex>>> parse_edge_list(const std::string& text);

/// Provenance sidecar: one `<vertex> <role> ...` line per generated vertex.
std::string serialize_provenance(const ReductionOutput& out);

/// One structured result object per run (schema pcp-result/1), JSON on a
/// single stream. Selection and coloring use 1-based ids.
struct ResultRecord {
    Solution solution;
    double wall_ms = 0.0;
    uint64_t lattice_size = 0;
    const PcpInstance* instance = nullptr; // for id translation
};

std::string serialize_result(const ResultRecord& rec);

} // namespace pcp

#endif
