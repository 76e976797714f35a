#ifndef PCP_FIELD_HPP
#define PCP_FIELD_HPP

#include <array>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcp {

/// Arbitrary-width integer mode: deterministic, no false negatives.
using Wide = boost::multiprecision::cpp_int;

/// 32 pre-verified primes just above 2^50. Sums of two residues stay below
/// 2^52, so modular addition never overflows 64 bits.
inline constexpr std::array<uint64_t, 32> kPrimePool = {
    0x4000000000037ULL, 0x4000000000063ULL, 0x4000000000091ULL, 0x400000000009fULL,
    0x40000000000c1ULL, 0x40000000000cdULL, 0x40000000000dfULL, 0x4000000000109ULL,
    0x4000000000151ULL, 0x4000000000159ULL, 0x4000000000181ULL, 0x400000000018dULL,
    0x40000000001b3ULL, 0x40000000001f3ULL, 0x4000000000235ULL, 0x4000000000249ULL,
    0x4000000000255ULL, 0x4000000000261ULL, 0x400000000027fULL, 0x4000000000283ULL,
    0x4000000000285ULL, 0x4000000000297ULL, 0x40000000002afULL, 0x40000000002cbULL,
    0x40000000002fdULL, 0x4000000000307ULL, 0x4000000000339ULL, 0x4000000000355ULL,
    0x4000000000369ULL, 0x4000000000373ULL, 0x4000000000379ULL, 0x400000000038dULL,
};

/// Arithmetic domain for lattice tables: a random prime from the pool, or
/// exact wide integers.
struct FieldSpec {
    enum class Mode { Modular, ExactWide };

    Mode mode = Mode::Modular;
    uint64_t modulus = kPrimePool[0];

    static FieldSpec modular(uint64_t prime) { return {Mode::Modular, prime}; }
    static FieldSpec exact_wide() { return {Mode::ExactWide, 0}; }

    bool operator==(const FieldSpec&) const = default;
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t mod) {
    uint64_t s = a + b;
    return s >= mod ? s - mod : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t mod) {
    return a >= b ? a - b : a + mod - b;
}

} // namespace pcp

#endif
