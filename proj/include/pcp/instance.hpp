#ifndef PCP_INSTANCE_HPP
#define PCP_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcp {

using Vertex = int;

/// Validation failure with the first offending entity attached.
class ValidationError : public std::runtime_error {
public:
    enum class Code {
        VertexInNoParts,
        VertexInTwoParts,
        SelfLoop,
        DuplicateEdge,
        EmptyPart,
        BadId,
    };

    ValidationError(Code code, long entity, const std::string& what)
        : std::runtime_error(what), code_(code), entity_(entity) {}

    Code code() const { return code_; }
    long entity() const { return entity_; }

private:
    Code code_;
    long entity_;
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Symmetric adjacency matrix backed by bitset rows.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    void add_edge(Vertex u, Vertex v) {
        set(u, v);
        set(v, u);
    }

    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    const uint64_t* row(Vertex u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
    int row_words() const { return words_; }

private:
    void set(Vertex u, Vertex v) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// A graph, a partition of its vertices, and a color budget.
/// Immutable after validate(); vertex ids are dense 0-based.
struct PcpInstance {
    int n = 0;
    int k = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;   // u < v, sorted, no dups
    std::vector<std::vector<Vertex>> parts;         // input order preserved

    int num_parts() const { return static_cast<int>(parts.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int max_part_size() const {
        size_t q = 0;
        for (const auto& part : parts) q = std::max(q, part.size());
        return static_cast<int>(q);
    }

    AdjacencyMatrix adjacency() const {
        AdjacencyMatrix adj(n);
        for (auto [u, v] : edges) adj.add_edge(u, v);
        return adj;
    }

    /// part id of each vertex
    std::vector<int> part_of() const {
        std::vector<int> owner(n, -1);
        for (int i = 0; i < num_parts(); ++i)
            for (Vertex v : parts[i]) owner[v] = i;
        return owner;
    }
};

/// One chosen vertex per part; entry i indexes into parts[i].
struct Selection {
    std::vector<int> chosen;

    Vertex vertex_in(const PcpInstance& inst, int part) const {
        return inst.parts[part][chosen[part]];
    }
};

/// Colors 1..k on the chosen vertices.
struct Coloring {
    std::vector<std::pair<Vertex, int>> assignment;

    std::optional<int> color_of(Vertex v) const {
        for (auto [u, c] : assignment)
            if (u == v) return c;
        return std::nullopt;
    }
};

struct Solution {
    bool yes = false;
    std::optional<std::pair<Selection, Coloring>> certificate;
    std::string solver_tag;
    double error_bound = 0.0;          // one-sided, "no" verdicts only
    std::vector<uint64_t> primes_used; // modular mode
};

/// Checks all PcpInstance invariants; throws ValidationError naming the
/// first offending entity. Edges are normalized (u < v, sorted).
PcpInstance validate_instance(int n, int k,
                              std::vector<std::pair<Vertex, Vertex>> edges,
                              std::vector<std::vector<Vertex>> parts);

/// True iff sel picks one vertex per part, colors lie in 1..k, and no edge
/// between chosen vertices is monochromatic.
bool verify_certificate(const PcpInstance& inst, const Selection& sel, const Coloring& col);

/// Adjacency among the p chosen vertices; entry (i,j) refers to parts i and j.
AdjacencyMatrix induced_selection_graph(const PcpInstance& inst, const Selection& sel);

} // namespace pcp

#endif
