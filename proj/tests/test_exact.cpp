#include "pcp/exact.hpp"

#include "pcp/gen.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace pcp;

namespace {

PcpInstance petersen(int k) {
    // outer C5 0..4, inner pentagram 5..9, spokes i - i+5
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < 10; ++v) parts.push_back({v});
    return validate_instance(10, k, std::move(edges), std::move(parts));
}

} // namespace

TEST_CASE("build_indicator on a single edge with singleton parts") {
    auto inst = validate_instance(2, 1, {{0, 1}}, {{0}, {1}});
    auto f = build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]));
    CHECK(f.values[0] == 1); // empty
    CHECK(f.values[1] == 1); // {a}
    CHECK(f.values[2] == 1); // {b}
    CHECK(f.values[3] == 0); // {a,b} spans the edge
}

TEST_CASE("build_indicator is all-ones on an edgeless graph") {
    auto inst = validate_instance(5, 2, {}, {{0, 1}, {2}, {3, 4}});
    auto f = build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]));
    for (auto v : f.values) CHECK(v == 1);
}

TEST_CASE("build_indicator on C5 with grouped parts") {
    auto inst = validate_instance(5, 1, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                                  {{0, 1}, {2, 3}, {4}});
    auto f = build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]));
    // {2,4} in 1-based ids = vertices 1 and 3 = digits (2,2,0): no edge 1-3
    auto sh = LatticeShape::from_instance(inst);
    CHECK(f.values[sh.encode(std::vector<int>{2, 2, 0})] == 1);
    // {1,2} = vertices 0,1 are adjacent but never share a semi-selection;
    // {2,3} = vertices 1,2 = digits (2,1,0) spans an edge
    CHECK(f.values[sh.encode(std::vector<int>{2, 1, 0})] == 0);
}

TEST_CASE("build_indicator matches a direct independence scan") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const int p = 1 + static_cast<int>(rng.next_below(4));
        const int q = 1 + static_cast<int>(rng.next_below(3));
        const int n = p + static_cast<int>(rng.next_below(p * (q - 1) + 1));
        auto inst = gen_instance(n, p, q, 0.5, 1, trial + 500);
        auto f = build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]));
        auto sh = f.shape;
        auto adj = inst.adjacency();
        std::vector<int> digits;
        for (uint64_t i = 0; i < sh.size; ++i) {
            sh.decode(i, digits);
            std::vector<Vertex> chosen;
            for (int c = 0; c < sh.num_parts(); ++c)
                if (digits[c] > 0) chosen.push_back(inst.parts[c][digits[c] - 1]);
            bool indep = true;
            for (size_t a = 0; a < chosen.size(); ++a)
                for (size_t b = a + 1; b < chosen.size(); ++b)
                    if (adj.adjacent(chosen[a], chosen[b])) indep = false;
            CHECK(f.values[i] == (indep ? 1 : 0));
        }
    }
}

TEST_CASE("power_convolve base case and doubling counts") {
    auto inst = validate_instance(2, 1, {{0, 1}}, {{0}, {1}});
    auto f = build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]));

    size_t convs = 99;
    auto p1 = power_convolve(f, 1, &convs);
    CHECK(convs == 0);
    CHECK(p1.values == f.values);

    auto p4 = power_convolve(f, 4, &convs);
    CHECK(convs == 2); // square twice
    CHECK(p4.values[3] == 12); // 4*4 class maps minus the 4 monochromatic ones

    power_convolve(f, 2, &convs);
    CHECK(convs == 1);
    power_convolve(f, 3, &convs);
    CHECK(convs == 2);
    power_convolve(f, 5, &convs);
    CHECK(convs == 3);

    // single edge, k=2: both orders of {a},{b} split the top code
    auto p2 = power_convolve(f, 2);
    CHECK(p2.values[3] == 2);
}

TEST_CASE("solve_exact on the triangle") {
    auto tri3 = validate_instance(3, 3, {{0, 1}, {1, 2}, {2, 0}}, {{0}, {1}, {2}});
    auto sol = solve_exact(tri3);
    CHECK(sol.yes);
    REQUIRE(sol.certificate.has_value());
    CHECK(verify_certificate(tri3, sol.certificate->first, sol.certificate->second));

    auto tri2 = validate_instance(3, 2, {{0, 1}, {1, 2}, {2, 0}}, {{0}, {1}, {2}});
    CHECK_FALSE(solve_exact(tri2).yes);
    CHECK(solve_exact(tri2).error_bound < 0.01);
}

TEST_CASE("solve_exact: C5 grouped, k=1 is no") {
    auto inst = validate_instance(5, 1, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                                  {{0, 1}, {2, 3}, {4}});
    CHECK_FALSE(solve_exact(inst).yes);
    ExactOptions wide;
    wide.exact_wide = true;
    auto sol = solve_exact(inst, wide);
    CHECK_FALSE(sol.yes);
    CHECK(sol.error_bound == 0.0);
}

TEST_CASE("solve_exact: Petersen graph needs exactly 3 colors") {
    CHECK_FALSE(solve_exact(petersen(2)).yes);
    auto sol = solve_exact(petersen(3));
    CHECK(sol.yes);
    CHECK(verify_certificate(petersen(3), sol.certificate->first, sol.certificate->second));
}

TEST_CASE("k is clamped to p") {
    auto inst = validate_instance(2, 9, {{0, 1}}, {{0}, {1}});
    auto sol = solve_exact(inst);
    CHECK(sol.yes);
    CHECK(verify_certificate(inst, sol.certificate->first, sol.certificate->second));
}

TEST_CASE("exact-wide counting matches tuple enumeration") {
    SplitMix64 rng(201);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = 1 + static_cast<int>(rng.next_below(4));
        const int q = 1 + static_cast<int>(rng.next_below(2));
        const int n = p + static_cast<int>(rng.next_below(p * (q - 1) + 1));
        const int k = 1 + static_cast<int>(rng.next_below(3));
        auto inst = gen_instance(n, p, q, 0.5, k, trial + 900);
        auto f = build_indicator<Wide>(inst, FieldSpec::exact_wide());
        auto fk = power_convolve(f, k);
        std::vector<int> digits;
        for (uint64_t i = 0; i < f.shape.size; ++i) {
            f.shape.decode(i, digits);
            CHECK(fk.values[i] == Wide(pcp::testing::count_ordered_ktuples(inst, digits, k)));
        }
    }
}

TEST_CASE("f^{*k} is monotone in k at full rank (exact-wide)") {
    SplitMix64 rng(301);
    for (int trial = 0; trial < 10; ++trial) {
        auto inst = gen_instance(6, 3, 2, 0.4, 2, trial + 70);
        auto f = build_indicator<Wide>(inst, FieldSpec::exact_wide());
        auto ranks = f.shape.ranks();
        for (int k = 1; k < 3; ++k) {
            auto a = power_convolve(f, k);
            auto b = power_convolve(f, k + 1);
            for (uint64_t i = 0; i < f.shape.size; ++i)
                if (ranks[i] == 3) CHECK(a.values[i] <= b.values[i]);
        }
    }
}

TEST_CASE("solve_exact agrees with the oracle on random instances") {
    SplitMix64 rng(401);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int p = 1 + static_cast<int>(rng.next_below(6));
        const int q = 1 + static_cast<int>(rng.next_below(3));
        const int n = p + static_cast<int>(rng.next_below(p * (q - 1) + 1));
        const int k = 1 + static_cast<int>(rng.next_below(p));
        auto inst = gen_instance(n, p, q, 0.3, k, trial + 4000);
        if (LatticeShape::from_instance(inst).size > 4096) continue;

        const bool expected = oracle_solve(inst).yes;
        CHECK(solve_exact(inst).yes == expected);
        ExactOptions wide;
        wide.exact_wide = true;
        CHECK(solve_exact(inst, wide).yes == expected);
        ++checked;
    }
    CHECK(checked > 80);
}

TEST_CASE("extract_certificate") {
    auto tri = validate_instance(3, 3, {{0, 1}, {1, 2}, {2, 0}}, {{0}, {1}, {2}});
    auto col = extract_certificate(tri, Selection{{0, 0, 0}});
    CHECK(verify_certificate(tri, Selection{{0, 0, 0}}, col));

    auto edgeless = validate_instance(3, 1, {}, {{0}, {1}, {2}});
    auto col2 = extract_certificate(edgeless, Selection{{0, 0, 0}});
    for (auto [v, c] : col2.assignment) CHECK(c == 1);

    auto one_part = validate_instance(2, 1, {{0, 1}}, {{0, 1}});
    auto col3 = extract_certificate(one_part, Selection{{0}});
    CHECK(col3.assignment == std::vector<std::pair<Vertex, int>>{{0, 1}});

    auto tri1 = validate_instance(3, 1, {{0, 1}, {1, 2}, {2, 0}}, {{0}, {1}, {2}});
    CHECK_THROWS_AS(extract_certificate(tri1, Selection{{0, 0, 0}}), CertificateExtractionFailed);
}

TEST_CASE("memory budget is enforced") {
    auto inst = gen_instance(12, 4, 3, 0.2, 2, 5);
    CHECK_THROWS_AS(build_indicator<uint64_t>(inst, FieldSpec::modular(kPrimePool[0]), 16),
                    LatticeError);
}
