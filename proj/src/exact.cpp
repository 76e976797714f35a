#include "pcp/exact.hpp"

#include <algorithm>

namespace pcp {

namespace {

Selection selection_from_code(const LatticeShape& shape, uint64_t idx) {
    std::vector<int> digits;
    shape.decode(idx, digits);
    Selection sel;
    sel.chosen.resize(digits.size());
    for (size_t i = 0; i < digits.size(); ++i) sel.chosen[i] = digits[i] - 1;
    return sel;
}

template <typename T>
std::optional<uint64_t> first_nonzero_full_rank(const SemiSelectionTable<T>& table,
                                                const std::vector<uint8_t>& ranks, int p) {
    for (uint64_t i = 0; i < table.shape.size; ++i)
        if (ranks[i] == p && table.values[i] != T{0}) return i;
    return std::nullopt;
}

Solution yes_solution(const PcpInstance& inst, const LatticeShape& shape, uint64_t code,
                      const std::string& tag) {
    Selection sel = selection_from_code(shape, code);
    Coloring col = extract_certificate(inst, sel);
    Solution sol;
    sol.yes = true;
    sol.certificate = {std::move(sel), std::move(col)};
    sol.solver_tag = tag;
    return sol;
}

} // namespace

Coloring extract_certificate(const PcpInstance& inst, const Selection& sel) {
    const int p = inst.num_parts();
    const int k = std::min(inst.k, p);
    AdjacencyMatrix sub = induced_selection_graph(inst, sel);
    std::vector<int> colors;
    if (!color_graph_backtracking(sub, k, colors))
        throw CertificateExtractionFailed("selection reported k-colorable but no coloring exists");
    Coloring col;
    for (int i = 0; i < p; ++i) col.assignment.emplace_back(sel.vertex_in(inst, i), colors[i]);
    return col;
}

Solution solve_exact(const PcpInstance& inst, const ExactOptions& opts) {
    const int p = inst.num_parts();
    const int k = std::min(inst.k, p);
    PcpInstance clamped = inst;
    clamped.k = k;

    const LatticeShape shape = LatticeShape::from_instance(inst);
    const auto ranks = shape.ranks();

    if (opts.exact_wide) {
        if (p > 16)
            throw std::invalid_argument("exact-wide mode supports at most 16 parts");
        auto f = build_indicator<Wide>(clamped, FieldSpec::exact_wide(), opts.memory_budget_points);
        auto fk = power_convolve(f, k);
        if (auto code = first_nonzero_full_rank(fk, ranks, p))
            return yes_solution(clamped, shape, *code, "exact-wide");
        Solution sol;
        sol.yes = false;
        sol.solver_tag = "exact-wide";
        sol.error_bound = 0.0;
        return sol;
    }

    // Modular mode: f^{*k}(S) <= k^p, so at most ceil(p*log2(k)/50) primes
    // from the pool can divide a nonzero count.
    std::mt19937_64 rng(opts.seed);
    std::vector<uint64_t> pool(kPrimePool.begin(), kPrimePool.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    const int repeats = std::max(1, std::min<int>(opts.repeats, static_cast<int>(pool.size())));

    Solution sol;
    sol.solver_tag = "exact-modular";
    for (int r = 0; r < repeats; ++r) {
        const uint64_t prime = pool[r];
        sol.primes_used.push_back(prime);
        auto f = build_indicator<uint64_t>(clamped, FieldSpec::modular(prime),
                                           opts.memory_budget_points);
        auto fk = power_convolve(f, k);
        if (auto code = first_nonzero_full_rank(fk, ranks, p)) {
            Solution yes = yes_solution(clamped, shape, *code, "exact-modular");
            yes.primes_used = sol.primes_used;
            return yes;
        }
    }
    sol.yes = false;
    const double bad = std::ceil(p * std::log2(static_cast<double>(k)) / 50.0);
    sol.error_bound = std::pow(bad / static_cast<double>(kPrimePool.size()), repeats);
    return sol;
}

} // namespace pcp
