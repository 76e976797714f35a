// AVX2 variants of the modular row kernels. Residues are < 2^51, so signed
// 64-bit compares are safe and a+b never wraps. Compiled with -mavx2; only
// reached when the dispatcher has confirmed AVX2 support.
#include "pcp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "pcp/field.hpp"

namespace pcp::kernels {

namespace {

void addmod_rows_avx2(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m) {
    const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i s = _mm256_add_epi64(a, b);
        // s - m where s >= m
        __m256i ge = _mm256_or_si256(_mm256_cmpgt_epi64(s, vm), _mm256_cmpeq_epi64(s, vm));
        s = _mm256_sub_epi64(s, _mm256_and_si256(ge, vm));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    for (; i < n; ++i) dst[i] = addmod(dst[i], src[i], m);
}

void submod_rows_avx2(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m) {
    const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_sub_epi64(a, b);
        // add m back where a < b
        __m256i lt = _mm256_cmpgt_epi64(b, a);
        d = _mm256_add_epi64(d, _mm256_and_si256(lt, vm));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    for (; i < n; ++i) dst[i] = submod(dst[i], src[i], m);
}

// No 64x64->128 multiply in AVX2; products take the scalar path.
void muladd_rows_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n, uint64_t m) {
    for (size_t i = 0; i < n; ++i) dst[i] = addmod(dst[i], mulmod(a[i], b[i], m), m);
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{addmod_rows_avx2, submod_rows_avx2, muladd_rows_avx2, "avx2"};
    return ops;
}

} // namespace pcp::kernels

#endif
