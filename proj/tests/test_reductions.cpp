#include "pcp/reductions.hpp"

#include "pcp/gen.hpp"
#include "pcp/oracle.hpp"
#include "pcp/special.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace pcp;

namespace {

CnfFormula random_cnf(SplitMix64& rng, int max_vars, int max_clauses, int width) {
    CnfFormula phi;
    phi.num_vars = 1 + static_cast<int>(rng.next_below(max_vars));
    const int m = 1 + static_cast<int>(rng.next_below(max_clauses));
    for (int t = 0; t < m; ++t) {
        std::vector<Literal> cl;
        for (int i = 0; i < width; ++i)
            cl.push_back({static_cast<int>(rng.next_below(phi.num_vars)),
                          static_cast<bool>(rng.next() & 1u)});
        phi.clauses.push_back(std::move(cl));
    }
    return phi;
}

} // namespace

TEST_CASE("sat_bruteforce basics") {
    CnfFormula contradiction{1, {{{0, true}}, {{0, false}}}};
    CHECK_FALSE(sat_bruteforce(contradiction).has_value());

    CnfFormula empty{3, {}};
    auto a = sat_bruteforce(empty);
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<bool>{false, false, false});

    CnfFormula xorish{2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}}};
    CHECK(sat_bruteforce(xorish).has_value());

    CnfFormula big{25, {}};
    CHECK_THROWS_AS(sat_bruteforce(big), TooManyVariables);
}

TEST_CASE("3-SAT reduction: structural counts") {
    CnfFormula one{3, {{{0, true}, {1, true}, {2, true}}}};
    auto out = reduce_3sat_to_pcp22(one);
    CHECK(out.instance.n == 11); // 9m+2
    CHECK(out.instance.num_parts() == 8); // 6m+2
    CHECK(out.instance.k == 2);
    CHECK(out.instance.max_part_size() == 2);
    CHECK(out.provenance.size() == 11);
    // 1 anchor edge + 9 per clause; no contrary pairs in an all-positive clause
    CHECK(out.instance.num_edges() == 1 + 9);

    CnfFormula wide{4, {{{0, true}, {1, true}, {2, true}, {3, true}}}};
    CHECK_THROWS_AS(reduce_3sat_to_pcp22(wide), ClauseTooWide);
}

TEST_CASE("3-SAT reduction: the worked two-clause example") {
    // (x1 v -x2 v x3) and (x2 v -x3 v x4)
    CnfFormula phi{4,
                   {{{0, true}, {1, false}, {2, true}},
                    {{1, true}, {2, false}, {3, true}}}};
    auto out = reduce_3sat_to_pcp22(phi);
    CHECK(out.instance.n == 20);
    CHECK(out.instance.num_parts() == 14);
    // contrary occurrence pairs: x2/-x2 and x3/-x3, one edge each
    CHECK(out.instance.num_edges() == 1 + 18 + 2);
    // phi is satisfiable, so the instance is a yes at k=2
    CHECK(sat_bruteforce(phi).has_value());
    CHECK(oracle_solve(out.instance).yes);
}

TEST_CASE("3-SAT reduction: conflict layers are triangles") {
    SplitMix64 rng(81);
    auto phi = random_cnf(rng, 5, 4, 3);
    auto out = reduce_3sat_to_pcp22(phi);
    auto adj = out.instance.adjacency();
    const int m = static_cast<int>(phi.clauses.size());
    CHECK(out.instance.n == 9 * m + 2);
    CHECK(out.instance.num_parts() == 6 * m + 2);
    for (int t = 0; t < m; ++t) {
        const Vertex c1 = 2 + 9 * t + 6, c2 = c1 + 1, c3 = c1 + 2;
        CHECK(adj.adjacent(c1, c2));
        CHECK(adj.adjacent(c1, c3));
        CHECK(adj.adjacent(c2, c3));
        CHECK(out.provenance[c1].role == GadgetRole::ConflictLayer);
    }
}

TEST_CASE("3-SAT reduction preserves the answer") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        auto phi = random_cnf(rng, 5, 4, 3);
        auto out = reduce_3sat_to_pcp22(phi);
        CHECK(sat_bruteforce(phi).has_value() == dispatch(out.instance).yes);
    }
}

TEST_CASE("q-SAT reduction: examples") {
    CnfFormula pair{2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}}};
    auto out = reduce_qsat_to_pcpk1(pair, 3);
    CHECK(out.instance.n == 4);
    CHECK(out.instance.num_parts() == 2);
    CHECK(out.instance.num_edges() == 2);
    CHECK(out.instance.k == 1);
    CHECK(oracle_solve(out.instance).yes);

    CnfFormula forced{1, {{{0, true}}, {{0, false}}}};
    auto no = reduce_qsat_to_pcpk1(forced, 3);
    CHECK(no.instance.n == 2);
    CHECK(no.instance.num_edges() == 1);
    CHECK_FALSE(oracle_solve(no.instance).yes);

    CnfFormula single{3, {{{0, true}, {1, true}, {2, true}}}};
    auto yes = reduce_qsat_to_pcpk1(single, 3);
    CHECK(yes.instance.n == 3);
    CHECK(yes.instance.num_parts() == 1);
    CHECK(yes.instance.num_edges() == 0);
    CHECK(oracle_solve(yes.instance).yes);

    CHECK_THROWS_AS(reduce_qsat_to_pcpk1(single, 2), ClauseTooWide);
}

TEST_CASE("q-SAT reduction: duplicate literals become distinct vertices") {
    CnfFormula dup{1, {{{0, true}, {0, true}}}};
    auto out = reduce_qsat_to_pcpk1(dup, 2);
    CHECK(out.instance.n == 2);
    CHECK(out.instance.num_parts() == 1);
    CHECK(out.instance.num_edges() == 0); // equal literals are not contrary
}

TEST_CASE("q-SAT reduction preserves the answer (widths 3 and 4)") {
    SplitMix64 rng(111);
    for (int width : {3, 4}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto phi = random_cnf(rng, 5, 4, width);
            auto out = reduce_qsat_to_pcpk1(phi, width);
            CHECK(sat_bruteforce(phi).has_value() == dispatch(out.instance).yes);
        }
    }
}

TEST_CASE("independent-set reduction: examples") {
    // K3, k_I = 2, k = 1: max independent set is 1
    std::vector<std::pair<Vertex, Vertex>> k3{{0, 1}, {1, 2}, {0, 2}};
    auto no = reduce_is_to_pcp(3, k3, 2, 1);
    CHECK(no.instance.n == 6);
    CHECK(no.instance.num_parts() == 2);
    CHECK_FALSE(oracle_solve(no.instance).yes);

    // P3 a-b-c, k_I = 2, k = 1: {a, c} works
    std::vector<std::pair<Vertex, Vertex>> p3{{0, 1}, {1, 2}};
    auto yes = reduce_is_to_pcp(3, p3, 2, 1);
    CHECK(oracle_solve(yes.instance).yes);

    // k = 3, k_I = 1: p = 3 and a K2 clique gadget
    auto g = reduce_is_to_pcp(3, k3, 1, 3);
    CHECK(g.instance.num_parts() == 3);
    CHECK(g.provenance[3].role == GadgetRole::Clique);
    CHECK(g.provenance[4].role == GadgetRole::Clique);
    auto adj = g.instance.adjacency();
    CHECK(adj.adjacent(3, 4));
}

TEST_CASE("independent-set reduction preserves the answer") {
    SplitMix64 rng(121);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.next_double() < 0.4) edges.emplace_back(u, v);
        const int alpha = pcp::testing::max_independent_set(n, edges);
        for (int ki = 1; ki <= 3; ++ki) {
            for (int k = 1; k <= 2; ++k) {
                auto out = reduce_is_to_pcp(n, edges, ki, k);
                CHECK(dispatch(out.instance).yes == (alpha >= ki));
            }
        }
    }
}

TEST_CASE("pad_instance: structure and answer preservation") {
    SplitMix64 rng(131);
    for (int trial = 0; trial < 25; ++trial) {
        const int p = 2 + static_cast<int>(rng.next_below(3));
        const int n = p + static_cast<int>(rng.next_below(p + 1));
        auto inst = gen_instance(n, p, 2, 0.5, 2, trial + 333);
        const bool before = oracle_solve(inst).yes;

        const int q_target = 2 + static_cast<int>(rng.next_below(3));
        const int k_target = 2 + static_cast<int>(rng.next_below(3));
        auto out = pad_instance(inst, q_target, k_target);
        CHECK(out.instance.num_parts() == p + k_target - 1);
        CHECK(out.instance.n == n + (k_target - 2) + q_target);
        CHECK(out.instance.k == k_target);
        CHECK(oracle_solve(out.instance).yes == before);
    }

    auto inst = gen_instance(4, 2, 2, 0.5, 2, 1);
    CHECK_THROWS_AS(pad_instance(inst, 1, 2), BadTarget);
    CHECK_THROWS_AS(pad_instance(inst, 2, 1), BadTarget);

    // k' = 2, q' = 2: only the dummy part is added
    auto min_pad = pad_instance(inst, 2, 2);
    CHECK(min_pad.instance.num_parts() == 3);
    CHECK(min_pad.instance.n == 6);
}

TEST_CASE("generated ids are canonical and reproducible") {
    CnfFormula phi{2, {{{0, true}, {1, false}, {0, false}}}};
    auto a = reduce_3sat_to_pcp22(phi);
    auto b = reduce_3sat_to_pcp22(phi);
    CHECK(a.instance.edges == b.instance.edges);
    CHECK(a.instance.parts == b.instance.parts);
    CHECK(a.provenance[0].role == GadgetRole::AnchorG);
    CHECK(a.provenance[1].role == GadgetRole::AnchorR);
    CHECK(a.provenance[2].role == GadgetRole::LiteralLayer);
    CHECK(a.provenance[5].role == GadgetRole::MiddleLayer);
}
