#include "pcp/lattice.hpp"

namespace pcp {

LatticeShape LatticeShape::from_radices(std::vector<int> radices) {
    LatticeShape sh;
    sh.radices = std::move(radices);
    sh.weights.resize(sh.radices.size());
    uint64_t w = 1;
    for (size_t i = 0; i < sh.radices.size(); ++i) {
        if (sh.radices[i] < 1)
            throw LatticeError(LatticeError::Code::DigitOutOfRange, "radix must be >= 1");
        sh.weights[i] = w;
        w *= static_cast<uint64_t>(sh.radices[i]);
    }
    sh.size = w;
    return sh;
}

LatticeShape LatticeShape::from_instance(const PcpInstance& inst) {
    std::vector<int> radices;
    radices.reserve(inst.parts.size());
    for (const auto& part : inst.parts) radices.push_back(static_cast<int>(part.size()) + 1);
    return from_radices(std::move(radices));
}

uint64_t LatticeShape::encode(std::span<const int> digits) const {
    if (digits.size() != radices.size())
        throw LatticeError(LatticeError::Code::DigitOutOfRange, "digit count mismatch");
    uint64_t idx = 0;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= radices[i])
            throw LatticeError(LatticeError::Code::DigitOutOfRange,
                               "digit " + std::to_string(digits[i]) + " out of range at coordinate " +
                                   std::to_string(i));
        idx += static_cast<uint64_t>(digits[i]) * weights[i];
    }
    return idx;
}

void LatticeShape::decode(uint64_t index, std::vector<int>& digits) const {
    digits.resize(radices.size());
    for (size_t i = 0; i < radices.size(); ++i) {
        digits[i] = static_cast<int>(index % static_cast<uint64_t>(radices[i]));
        index /= static_cast<uint64_t>(radices[i]);
    }
}

std::vector<uint8_t> LatticeShape::ranks() const {
    std::vector<uint8_t> out(size, 0);
    std::vector<int> digits(radices.size(), 0);
    int rank = 0;
    for (uint64_t idx = 1; idx < size; ++idx) {
        // odometer increment, tracking the nonzero-digit count
        size_t i = 0;
        while (true) {
            if (digits[i] == 0) ++rank;
            if (++digits[i] < radices[i]) break;
            digits[i] = 0;
            --rank;
            ++i;
        }
        out[idx] = static_cast<uint8_t>(rank);
    }
    return out;
}

bool subset_relation(std::span<const int> t, std::span<const int> s) {
    if (t.size() != s.size())
        throw LatticeError(LatticeError::Code::ShapeMismatch, "codes differ in length");
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] != 0 && t[i] != s[i]) return false;
    return true;
}

void lattice_minus(std::span<const int> s, std::span<const int> t, std::vector<int>& out) {
    out.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = t[i] == 0 ? s[i] : 0;
}

} // namespace pcp
