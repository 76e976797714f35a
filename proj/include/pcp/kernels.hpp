#ifndef PCP_KERNELS_HPP
#define PCP_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pcp::kernels {

// Modular row kernels over residues of primes < 2^51 (see field.hpp).
// dst and src must not alias. Scalar reference implementations and an
// AVX2 variant are selected once at load time.

struct Ops {
    // dst[i] = (dst[i] + src[i]) mod m
    void (*addmod_rows)(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m);
    // dst[i] = (dst[i] - src[i]) mod m
    void (*submod_rows)(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m);
    // dst[i] = (dst[i] + a[i]*b[i]) mod m   (scalar; 128-bit products)
    void (*muladd_rows)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n, uint64_t m);
    std::string_view name;
};

const Ops& scalar_ops();
const Ops& avx2_ops();   // valid only when avx2_available()
bool avx2_available();

/// Best ops for this machine, resolved once.
const Ops& active_ops();

} // namespace pcp::kernels

#endif
