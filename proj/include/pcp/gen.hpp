#ifndef PCP_GEN_HPP
#define PCP_GEN_HPP

#include "pcp/instance.hpp"

#include <cstdint>

namespace pcp {

class InfeasibleShape : public std::runtime_error {
public:
    explicit InfeasibleShape(const std::string& what) : std::runtime_error(what) {}
};

/// splitmix64 (Steele, Lea, Flood 2014): the suite's pinned generator, so
/// that (params, seed) -> output is stable across platforms and library
/// versions.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound) by rejection from the top 2^64 % bound values
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = uint64_t(-int64_t(bound)) % bound; // 2^64 mod bound
        uint64_t x;
        do {
            x = next();
        } while (x < limit);
        return x % bound;
    }

    /// uniform double in [0, 1) with 53 bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Random instance: part sizes drawn as a balanced composition of n into p
/// parts within [1, q], vertices assigned in id order, each vertex pair an
/// edge with probability edge_prob. Identical arguments give identical
/// instances.
PcpInstance gen_instance(int n, int p, int q, double edge_prob, int k, uint64_t seed);

} // namespace pcp

#endif
