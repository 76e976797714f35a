#ifndef PCP_LATTICE_HPP
#define PCP_LATTICE_HPP

#include "pcp/field.hpp"
#include "pcp/instance.hpp"
#include "pcp/kernels.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pcp {

class LatticeError : public std::runtime_error {
public:
    enum class Code { DigitOutOfRange, ShapeMismatch, FieldMismatch, MemoryBudgetExceeded };
    LatticeError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Mixed-radix index space over the semi-selection lattice: digit i ranges
/// over 0..|V_i| where 0 means "part i unselected" and j >= 1 means the j-th
/// vertex of part i in input order.
struct LatticeShape {
    std::vector<int> radices;       // |V_i| + 1
    std::vector<uint64_t> weights;  // weights[0]=1, weights[i+1]=weights[i]*radices[i]
    uint64_t size = 1;

    static LatticeShape from_radices(std::vector<int> radices);
    static LatticeShape from_instance(const PcpInstance& inst);

    int num_parts() const { return static_cast<int>(radices.size()); }

    uint64_t encode(std::span<const int> digits) const;
    void decode(uint64_t index, std::vector<int>& digits) const;

    /// rank (count of nonzero digits) of every index, in one O(size) sweep
    std::vector<uint8_t> ranks() const;

    bool operator==(const LatticeShape& o) const { return radices == o.radices; }
};

/// t is below s iff every nonzero digit of t matches s.
bool subset_relation(std::span<const int> t, std::span<const int> s);

/// digits of s \ t (s.digit where t.digit == 0, else 0)
void lattice_minus(std::span<const int> s, std::span<const int> t, std::vector<int>& out);

/// Dense table of field elements over a lattice shape. T is uint64_t
/// (residues mod field.modulus) or Wide.
template <typename T>
struct SemiSelectionTable {
    LatticeShape shape;
    FieldSpec field;
    std::vector<T> values;

    SemiSelectionTable() = default;
    SemiSelectionTable(LatticeShape s, FieldSpec f)
        : shape(std::move(s)), field(f), values(shape.size, T{0}) {}
};

namespace detail {

template <typename T>
void add_rows(T* dst, const T* src, size_t n, const FieldSpec& field) {
    if constexpr (std::is_same_v<T, uint64_t>) {
        kernels::active_ops().addmod_rows(dst, src, n, field.modulus);
    } else {
        for (size_t i = 0; i < n; ++i) dst[i] += src[i];
    }
}

template <typename T>
void sub_rows(T* dst, const T* src, size_t n, const FieldSpec& field) {
    if constexpr (std::is_same_v<T, uint64_t>) {
        kernels::active_ops().submod_rows(dst, src, n, field.modulus);
    } else {
        for (size_t i = 0; i < n; ++i) dst[i] -= src[i];
    }
}

template <typename T>
void muladd_rows(T* dst, const T* a, const T* b, size_t n, const FieldSpec& field) {
    if constexpr (std::is_same_v<T, uint64_t>) {
        kernels::active_ops().muladd_rows(dst, a, b, n, field.modulus);
    } else {
        for (size_t i = 0; i < n; ++i) dst[i] += a[i] * b[i];
    }
}

// One coordinatewise pass per part. Fibers with digit_i = j are contiguous
// runs of length weights[i], so each update is one row kernel call.
template <typename T, bool Inverse>
void transform_values(const LatticeShape& sh, std::vector<T>& v, const FieldSpec& field) {
    for (int i = 0; i < sh.num_parts(); ++i) {
        const uint64_t w = sh.weights[i];
        const uint64_t block = w * static_cast<uint64_t>(sh.radices[i]);
        for (uint64_t base = 0; base < sh.size; base += block) {
            for (int j = 1; j < sh.radices[i]; ++j) {
                T* dst = v.data() + base + static_cast<uint64_t>(j) * w;
                const T* src = v.data() + base;
                if constexpr (Inverse)
                    sub_rows(dst, src, w, field);
                else
                    add_rows(dst, src, w, field);
            }
        }
    }
}

} // namespace detail

/// values[s] <- sum over t below s of values[t]
template <typename T>
void zeta_in_place(SemiSelectionTable<T>& t) {
    detail::transform_values<T, false>(t.shape, t.values, t.field);
}

/// exact inverse of zeta_in_place
template <typename T>
void mobius_in_place(SemiSelectionTable<T>& t) {
    detail::transform_values<T, true>(t.shape, t.values, t.field);
}

/// Zeta-transformed rank slices of a table; the reusable half of a ranked
/// subset convolution.
template <typename T>
struct RankedOperand {
    LatticeShape shape;
    FieldSpec field;
    std::vector<std::vector<T>> slices; // index r: zeta of (values restricted to rank r)

    static RankedOperand build(const SemiSelectionTable<T>& t, const std::vector<uint8_t>& ranks) {
        const int p = t.shape.num_parts();
        RankedOperand op;
        op.shape = t.shape;
        op.field = t.field;
        op.slices.assign(p + 1, std::vector<T>(t.shape.size, T{0}));
        for (uint64_t i = 0; i < t.shape.size; ++i) op.slices[ranks[i]][i] = t.values[i];
        for (auto& slice : op.slices) detail::transform_values<T, false>(t.shape, slice, t.field);
        return op;
    }
};

/// Ranked subset convolution: for each result rank r, accumulate the
/// pointwise products of slices with ranks summing to r, invert the zeta,
/// and keep the entries of rank r. Rank additivity over the lattice
/// (rank(t) + rank(s\t) = rank(s)) makes this equal to the direct sum
/// over all t below s.
template <typename T>
SemiSelectionTable<T> convolve_ranked(const RankedOperand<T>& g, const RankedOperand<T>& h,
                                      const std::vector<uint8_t>& ranks) {
    if (!(g.shape == h.shape))
        throw LatticeError(LatticeError::Code::ShapeMismatch, "convolution operands differ in shape");
    if (!(g.field == h.field))
        throw LatticeError(LatticeError::Code::FieldMismatch, "convolution operands differ in field");

    const int p = g.shape.num_parts();
    const uint64_t size = g.shape.size;
    SemiSelectionTable<T> out(g.shape, g.field);
    std::vector<T> acc(size);
    for (int r = 0; r <= p; ++r) {
        std::fill(acc.begin(), acc.end(), T{0});
        for (int a = 0; a <= r; ++a)
            detail::muladd_rows(acc.data(), g.slices[a].data(), h.slices[r - a].data(), size, g.field);
        detail::transform_values<T, true>(g.shape, acc, g.field);
        for (uint64_t i = 0; i < size; ++i)
            if (ranks[i] == r) out.values[i] = std::move(acc[i]);
    }
    return out;
}

/// (g*h)(s) = sum over t below s of g(t) * h(s\t)
template <typename T>
SemiSelectionTable<T> subset_convolve(const SemiSelectionTable<T>& g, const SemiSelectionTable<T>& h) {
    if (!(g.shape == h.shape))
        throw LatticeError(LatticeError::Code::ShapeMismatch, "convolution operands differ in shape");
    if (!(g.field == h.field))
        throw LatticeError(LatticeError::Code::FieldMismatch, "convolution operands differ in field");
    const auto ranks = g.shape.ranks();
    auto G = RankedOperand<T>::build(g, ranks);
    if (&g == &h) return convolve_ranked(G, G, ranks);
    auto H = RankedOperand<T>::build(h, ranks);
    return convolve_ranked(G, H, ranks);
}

} // namespace pcp

#endif
