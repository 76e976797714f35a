#include "pcp/field.hpp"
#include "pcp/gen.hpp"
#include "pcp/kernels.hpp"

#include <doctest.h>

using namespace pcp;

namespace {

std::vector<uint64_t> random_residues(SplitMix64& rng, size_t n, uint64_t mod) {
    std::vector<uint64_t> v(n);
    for (auto& x : v) x = rng.next_below(mod);
    return v;
}

} // namespace

TEST_CASE("scalar kernels match direct modular arithmetic") {
    const auto& ops = kernels::scalar_ops();
    SplitMix64 rng(31);
    for (uint64_t mod : {kPrimePool[0], kPrimePool[31]}) {
        auto a = random_residues(rng, 100, mod);
        auto b = random_residues(rng, 100, mod);
        auto add = a, sub = a, mul = a;
        ops.addmod_rows(add.data(), b.data(), a.size(), mod);
        ops.submod_rows(sub.data(), b.data(), a.size(), mod);
        ops.muladd_rows(mul.data(), a.data(), b.data(), a.size(), mod);
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(add[i] == addmod(a[i], b[i], mod));
            CHECK(sub[i] == submod(a[i], b[i], mod));
            CHECK(mul[i] == addmod(a[i], mulmod(a[i], b[i], mod), mod));
        }
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!kernels::avx2_available()) return;
    const auto& scalar = kernels::scalar_ops();
    const auto& simd = kernels::avx2_ops();
    SplitMix64 rng(37);

    for (int trial = 0; trial < 50; ++trial) {
        const uint64_t mod = kPrimePool[rng.next_below(32)];
        const size_t n = 1 + rng.next_below(300); // exercises tail handling
        auto a = random_residues(rng, n, mod);
        auto b = random_residues(rng, n, mod);

        auto s1 = a, s2 = a;
        scalar.addmod_rows(s1.data(), b.data(), n, mod);
        simd.addmod_rows(s2.data(), b.data(), n, mod);
        CHECK(s1 == s2);

        s1 = a;
        s2 = a;
        scalar.submod_rows(s1.data(), b.data(), n, mod);
        simd.submod_rows(s2.data(), b.data(), n, mod);
        CHECK(s1 == s2);

        s1 = a;
        s2 = a;
        scalar.muladd_rows(s1.data(), a.data(), b.data(), n, mod);
        simd.muladd_rows(s2.data(), a.data(), b.data(), n, mod);
        CHECK(s1 == s2);
    }
}

TEST_CASE("boundary residues near the modulus") {
    if (!kernels::avx2_available()) return;
    const uint64_t mod = kPrimePool[0];
    std::vector<uint64_t> a = {0, mod - 1, mod - 1, 0, 1, mod - 2, mod / 2, mod / 2 + 1};
    std::vector<uint64_t> b = {0, mod - 1, 1, mod - 1, 0, 2, mod / 2, mod / 2};
    auto s1 = a, s2 = a;
    kernels::scalar_ops().addmod_rows(s1.data(), b.data(), a.size(), mod);
    kernels::avx2_ops().addmod_rows(s2.data(), b.data(), a.size(), mod);
    CHECK(s1 == s2);
    s1 = a;
    s2 = a;
    kernels::scalar_ops().submod_rows(s1.data(), b.data(), a.size(), mod);
    kernels::avx2_ops().submod_rows(s2.data(), b.data(), a.size(), mod);
    CHECK(s1 == s2);
}

TEST_CASE("active ops are resolved") {
    const auto& ops = kernels::active_ops();
    CHECK(ops.addmod_rows != nullptr);
    CHECK((ops.name == "avx2") == kernels::avx2_available());
}
