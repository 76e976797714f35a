#include "pcp/io.hpp"

#include "pcp/lattice.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pcp {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long parse_long(const std::string& tok, int line) {
    size_t pos = 0;
    long value;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw SyntaxError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw SyntaxError(line, "expected an integer, got '" + tok + "'");
    return value;
}

} // namespace

PcpInstance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, p = 0, k = 0;
    std::vector<int> part_of;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(ss, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw SyntaxError(lineno, "duplicate header");
            if (toks.size() != 5 || toks[1] != "pcp")
                throw SyntaxError(lineno, "expected header 'p pcp <n> <p> <k>'");
            n = static_cast<int>(parse_long(toks[2], lineno));
            p = static_cast<int>(parse_long(toks[3], lineno));
            k = static_cast<int>(parse_long(toks[4], lineno));
            if (n < 0 || p < 0 || k < 1) throw SyntaxError(lineno, "bad header values");
            part_of.assign(n, -1);
            have_header = true;
        } else if (toks[0] == "v") {
            if (!have_header) throw SyntaxError(lineno, "'v' line before header");
            if (toks.size() != 3) throw SyntaxError(lineno, "expected 'v <vertex> <part>'");
            long v = parse_long(toks[1], lineno) - 1;
            long part = parse_long(toks[2], lineno) - 1;
            if (v < 0 || v >= n) throw SyntaxError(lineno, "vertex id out of range");
            if (part < 0 || part >= p) throw SyntaxError(lineno, "part id out of range");
            if (part_of[v] >= 0)
                throw ValidationError(ValidationError::Code::VertexInTwoParts, v,
                                      "vertex " + std::to_string(v + 1) + " assigned twice");
            part_of[v] = static_cast<int>(part);
        } else if (toks[0] == "e") {
            if (!have_header) throw SyntaxError(lineno, "'e' line before header");
            if (toks.size() != 3) throw SyntaxError(lineno, "expected 'e <u> <v>'");
            long u = parse_long(toks[1], lineno) - 1;
            long v = parse_long(toks[2], lineno) - 1;
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw SyntaxError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw SyntaxError(lineno, "missing 'p pcp' header");

    for (Vertex v = 0; v < n; ++v)
        if (part_of[v] < 0)
            throw ValidationError(ValidationError::Code::VertexInNoParts, v,
                                  "no 'v' line for vertex " + std::to_string(v + 1));

    // parts keep vertices in id order; file order defines nothing else
    std::vector<std::vector<Vertex>> parts(p);
    for (Vertex v = 0; v < n; ++v) parts[part_of[v]].push_back(v);
    return validate_instance(n, k, std::move(edges), std::move(parts));
}

std::string serialize_instance(const PcpInstance& inst) {
    std::ostringstream out;
    out << "p pcp " << inst.n << ' ' << inst.num_parts() << ' ' << inst.k << '\n';
    const auto owner = inst.part_of();
    for (Vertex v = 0; v < inst.n; ++v) out << "v " << v + 1 << ' ' << owner[v] + 1 << '\n';
    for (auto [u, v] : inst.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    CnfFormula phi;
    std::vector<Literal> current;

    while (std::getline(ss, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "cnf")
                throw SyntaxError(lineno, "expected header 'p cnf <vars> <clauses>'");
            phi.num_vars = static_cast<int>(parse_long(toks[2], lineno));
            if (phi.num_vars < 0) throw SyntaxError(lineno, "bad variable count");
            have_header = true;
            continue;
        }
        if (!have_header) throw SyntaxError(lineno, "clause before 'p cnf' header");
        for (const auto& tok : toks) {
            long lit = parse_long(tok, lineno);
            if (lit == 0) {
                if (current.empty()) throw SyntaxError(lineno, "empty clause");
                phi.clauses.push_back(std::move(current));
                current.clear();
            } else {
                long var = std::labs(lit) - 1;
                if (var >= phi.num_vars) throw SyntaxError(lineno, "literal out of range: " + tok);
                current.push_back({static_cast<int>(var), lit > 0});
            }
        }
    }
    if (!current.empty()) phi.clauses.push_back(std::move(current));
    if (!have_header) throw SyntaxError(lineno, "missing 'p cnf' header");
    return phi;
}

std::string serialize_cnf(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& cl : phi.clauses) {
        for (const Literal& l : cl) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
        out << "0\n";
    }
    return out.str();
}

std::pair<int, std::vector<std::pair<Vertex, Vertex>>> parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    int n = 0;
    bool pinned = false;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(ss, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "edge")
                throw SyntaxError(lineno, "expected header 'p edge <n> <m>'");
            n = static_cast<int>(parse_long(toks[2], lineno));
            pinned = true;
            continue;
        }
        if (toks.size() != 2) throw SyntaxError(lineno, "expected '<u> <v>'");
        long u = parse_long(toks[0], lineno) - 1;
        long v = parse_long(toks[1], lineno) - 1;
        if (u < 0 || v < 0) throw SyntaxError(lineno, "ids are 1-based");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!pinned) n = std::max({n, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
    }
    return {n, std::move(edges)};
}

std::string serialize_provenance(const ReductionOutput& out) {
    std::ostringstream os;
    os << "c vertex role clause position copy source\n";
    for (size_t v = 0; v < out.provenance.size(); ++v) {
        const auto& pr = out.provenance[v];
        os << v + 1 << ' ' << gadget_role_name(pr.role) << ' ' << pr.clause + 1 << ' '
           << pr.position + 1 << ' ' << pr.copy + 1 << ' ' << pr.source_vertex + 1 << '\n';
    }
    return os.str();
}

std::string serialize_result(const ResultRecord& rec) {
    nlohmann::json j;
    j["schema"] = "pcp-result/1";
    j["verdict"] = rec.solution.yes ? "yes" : "no";
    j["solver_tag"] = rec.solution.solver_tag;
    j["wall_ms"] = rec.wall_ms;
    j["lattice_size"] = rec.lattice_size;
    j["error_bound"] = rec.solution.error_bound;
    j["primes"] = rec.solution.primes_used;
    if (rec.solution.certificate && rec.instance) {
        const auto& [sel, col] = *rec.solution.certificate;
        std::map<std::string, int> selection;
        for (int i = 0; i < rec.instance->num_parts(); ++i)
            selection[std::to_string(i + 1)] = sel.vertex_in(*rec.instance, i) + 1;
        std::map<std::string, int> coloring;
        for (auto [v, c] : col.assignment) coloring[std::to_string(v + 1)] = c;
        j["selection"] = selection;
        j["coloring"] = coloring;
    }
    return j.dump();
}

} // namespace pcp
