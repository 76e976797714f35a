#ifndef PCP_EXACT_HPP
#define PCP_EXACT_HPP

#include "pcp/field.hpp"
#include "pcp/instance.hpp"
#include "pcp/lattice.hpp"
#include "pcp/oracle.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace pcp {

class CertificateExtractionFailed : public std::runtime_error {
public:
    explicit CertificateExtractionFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ExactOptions {
    bool exact_wide = false;
    int repeats = 2;                                 // independent primes in modular mode
    uint64_t seed = 0x9e3779b97f4a7c15ULL;           // prime selection
    uint64_t memory_budget_points = uint64_t{1} << 26;
};

/// Independence indicator over the semi-selection lattice: value 1 where the
/// semi-selection induces no edge, else 0. Built incrementally: each code of
/// rank r inherits from its predecessor with the lowest selected coordinate
/// cleared, plus adjacency checks of the newly added vertex.
template <typename T>
SemiSelectionTable<T> build_indicator(const PcpInstance& inst, const FieldSpec& field,
                                      uint64_t memory_budget_points = uint64_t{1} << 26) {
    LatticeShape shape = LatticeShape::from_instance(inst);
    if (shape.size > memory_budget_points)
        throw LatticeError(LatticeError::Code::MemoryBudgetExceeded,
                           "lattice size " + std::to_string(shape.size) + " exceeds budget " +
                               std::to_string(memory_budget_points));

    const AdjacencyMatrix adj = inst.adjacency();
    const int words = std::max(adj.row_words(), 1);
    const int p = shape.num_parts();

    SemiSelectionTable<T> f(shape, field);
    std::vector<uint64_t> chosen_mask(shape.size * static_cast<uint64_t>(words), 0);

    f.values[0] = T{1}; // empty semi-selection is independent
    std::vector<int> digits(p, 0);
    for (uint64_t idx = 1; idx < shape.size; ++idx) {
        size_t i = 0; // odometer; coordinate 0 cycles fastest
        while (digits[i] + 1 == shape.radices[i]) digits[i++] = 0;
        ++digits[i];
        const uint64_t pred = idx - static_cast<uint64_t>(digits[i]) * shape.weights[i];

        const Vertex v = inst.parts[i][digits[i] - 1];
        const uint64_t* pm = chosen_mask.data() + pred * words;
        uint64_t* cm = chosen_mask.data() + idx * words;
        bool independent = f.values[pred] != T{0};
        const uint64_t* row = adj.row(v);
        for (int w = 0; w < words; ++w) {
            if (row[w] & pm[w]) independent = false;
            cm[w] = pm[w];
        }
        cm[v / 64] |= uint64_t{1} << (v % 64);
        if (independent) f.values[idx] = T{1};
    }
    return f;
}

/// f^{*k} by repeated squaring over the high-to-low bits of k; uses
/// ceil(log2 k) + popcount(k) - 1 convolutions. Zeta slices of f are built
/// once and reused for the odd-bit multiplies.
template <typename T>
SemiSelectionTable<T> power_convolve(const SemiSelectionTable<T>& f, int k,
                                     size_t* convolutions = nullptr) {
    if (k < 1) throw std::invalid_argument("power_convolve: k must be >= 1");
    if (convolutions) *convolutions = 0;
    if (k == 1) return f;

    const auto ranks = f.shape.ranks();
    const auto F = RankedOperand<T>::build(f, ranks);

    SemiSelectionTable<T> acc = f;
    const int top = std::bit_width(static_cast<unsigned>(k)) - 1;
    for (int bit = top - 1; bit >= 0; --bit) {
        auto A = RankedOperand<T>::build(acc, ranks);
        acc = convolve_ranked(A, A, ranks);
        if (convolutions) ++*convolutions;
        if ((k >> bit) & 1) {
            auto B = RankedOperand<T>::build(acc, ranks);
            acc = convolve_ranked(B, F, ranks);
            if (convolutions) ++*convolutions;
        }
    }
    return acc;
}

/// Recolors the induced p-vertex graph of a selection known to be
/// k-colorable. Throws CertificateExtractionFailed if the coloring fails,
/// which would indicate an arithmetic bug upstream.
Coloring extract_certificate(const PcpInstance& inst, const Selection& sel);

/// Algorithm: build the independence indicator f, raise it to the k-th
/// convolution power, and scan full-rank codes for a nonzero value. A
/// nonzero residue proves a positive true count, so "yes" is never wrong;
/// "no" in modular mode carries a Monte Carlo error bound.
Solution solve_exact(const PcpInstance& inst, const ExactOptions& opts = {});

} // namespace pcp

#endif
