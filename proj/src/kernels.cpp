#include "pcp/kernels.hpp"

namespace pcp::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

#if !defined(__x86_64__) && !defined(_M_X64)
const Ops& avx2_ops() { return scalar_ops(); }
#endif

const Ops& active_ops() {
    static const Ops& ops = avx2_available() ? avx2_ops() : scalar_ops();
    return ops;
}

} // namespace pcp::kernels
