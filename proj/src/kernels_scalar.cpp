#include "pcp/kernels.hpp"

#include "pcp/field.hpp"

namespace pcp::kernels {

namespace {

void addmod_rows_scalar(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m) {
    for (size_t i = 0; i < n; ++i) dst[i] = addmod(dst[i], src[i], m);
}

void submod_rows_scalar(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m) {
    for (size_t i = 0; i < n; ++i) dst[i] = submod(dst[i], src[i], m);
}

void muladd_rows_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n, uint64_t m) {
    for (size_t i = 0; i < n; ++i) dst[i] = addmod(dst[i], mulmod(a[i], b[i], m), m);
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{addmod_rows_scalar, submod_rows_scalar, muladd_rows_scalar, "scalar"};
    return ops;
}

} // namespace pcp::kernels
