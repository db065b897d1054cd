#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyneigh/bounds.hpp"
#include "polyneigh/classify.hpp"

using namespace polyneigh;

TEST_CASE("M_d entries for d = 4", "[bounds]") {
    const GTheoremContext ctx = m_matrix(4);
    REQUIRE(ctx.m.size() == 3);
    CHECK(ctx.m[0] == std::vector<long long>{1, 5, 10, 10, 5});
    CHECK(ctx.m[1] == std::vector<long long>{0, 1, 4, 6, 3});
    CHECK(ctx.m[2] == std::vector<long long>{0, 0, 1, 2, 1});
    CHECK_THROWS_AS(m_matrix(1), Error);
}

TEST_CASE("M_d is nonnegative with a unitriangular left block", "[bounds]") {
    for (int d = 2; d <= 12; ++d) {
        const GTheoremContext ctx = m_matrix(d);
        const int rows = d / 2 + 1;
        REQUIRE(static_cast<int>(ctx.m.size()) == rows);
        for (int i = 0; i < rows; ++i) {
            REQUIRE(static_cast<int>(ctx.m[static_cast<std::size_t>(i)].size()) == d + 1);
            for (int j = 0; j <= d; ++j) {
                CHECK(ctx.at(i, j) >= 0);
                if (j < i)
                    CHECK(ctx.at(i, j) == 0);
            }
            CHECK(ctx.at(i, i) == 1);
        }
    }
}

TEST_CASE("g recovery from reference f-vectors", "[bounds]") {
    CHECK(g_from_f({1, 6, 15, 18, 9}, 4).g == std::vector<long long>{1, 1, 1});
    // Simplex f-vectors give g = (1, 0, ..., 0).
    CHECK(g_from_f({1, 5, 10, 10, 5}, 4).g == std::vector<long long>{1, 0, 0});
    CHECK(g_from_f({1, 7, 21, 35, 35, 21, 7}, 6).g == std::vector<long long>{1, 0, 0, 0});
    CHECK(g_from_f({1, 10, 45, 120, 185, 150, 50}, 6).g == std::vector<long long>{1, 3, 6, 10});
}

TEST_CASE("g recovery rejects inconsistent or non-Macaulay input", "[bounds]") {
    try {
        g_from_f({1, 6, 15, 18, 10}, 4);
        FAIL("expected fvector_inconsistent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::fvector_inconsistent);
    }
    // f = (1,0,5) M_4 reconstructs, but (1,0,5) violates the growth rule.
    try {
        g_from_f({1, 5, 15, 20, 10}, 4);
        FAIL("expected not_m_sequence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_m_sequence);
    }
    CHECK_THROWS_AS(g_from_f({1, 6, 15, 18}, 4), Error);
}

TEST_CASE("round trip f -> g -> f on valid simplicial data", "[bounds]") {
    const std::vector<std::pair<std::vector<long long>, int>> cases = {
        {{1, 6, 15, 18, 9}, 4},    {{1, 8, 28, 52, 50, 20}, 5},
        {{1, 9, 36, 84, 117, 90, 30}, 6}, {{1, 10, 45, 120, 185, 150, 50}, 6}};
    for (const auto& [f, d] : cases) {
        const GVector g = g_from_f(f, d);
        const GTheoremContext ctx = m_matrix(d);
        for (int j = 0; j <= d; ++j) {
            long long acc = 0;
            for (std::size_t i = 0; i < g.g.size(); ++i)
                acc += g.g[i] * ctx.at(static_cast<int>(i), j);
            CHECK(acc == f[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("M-sequence recognition", "[bounds]") {
    CHECK(is_m_sequence({1}));
    CHECK(is_m_sequence({1, 1, 1}));
    CHECK(is_m_sequence({1, 100}));
    CHECK(is_m_sequence({1, 3, 6, 10}));
    CHECK(is_m_sequence({1, 3, 6}));
    CHECK_FALSE(is_m_sequence({1, 0, 5}));
    CHECK_FALSE(is_m_sequence({1, 3, 7}));
    CHECK_FALSE(is_m_sequence({2, 1}));
    CHECK_FALSE(is_m_sequence({1, -1}));
    CHECK_FALSE(is_m_sequence({1, 2, 4, 9}));
    CHECK(is_m_sequence({1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(is_m_sequence({}), Error);
}

TEST_CASE("g-theorem face bounds", "[bounds]") {
    CHECK(g_theorem_face_bound(4, 6, 2, 3) == 9);
    CHECK(g_theorem_face_bound(6, 10, 2, 5) == 40);
    CHECK(g_theorem_face_bound(5, 8, 2, 4) == 20);
    CHECK_THROWS_AS(g_theorem_face_bound(3, 8, 2, 2), Error);
    CHECK_THROWS_AS(g_theorem_face_bound(4, 5, 2, 3), Error);
    CHECK_THROWS_AS(g_theorem_face_bound(4, 6, 2, 4), Error);
}

TEST_CASE("closed form for the simplicial minimum", "[bounds]") {
    CHECK(msn(4, 6) == 9);
    CHECK(msn(5, 8) == 20);
    for (int d = 4; d <= 9; ++d)
        CHECK(msn(d, d + 1) == d + 1);
    CHECK_THROWS_AS(msn(3, 6), Error);
    CHECK_THROWS_AS(msn(5, 5), Error);
}

TEST_CASE("closed form equals the g-theorem facet specialization", "[bounds]") {
    for (int d = 4; d <= 10; ++d)
        for (int v = d + 2; v <= d + 8; ++v)
            CHECK(msn(d, v) == g_theorem_face_bound(d, v, 2, d - 1));
}

TEST_CASE("the simplicial minimum is monotone", "[bounds]") {
    for (int d = 4; d <= 10; ++d)
        for (int v = d + 2; v <= d + 12; ++v)
            CHECK(msn(d, v) > msn(d, v - 1));
    for (int delta = 1; delta <= 8; ++delta)
        for (int d = 5; d <= 10; ++d)
            CHECK(msn(d, d + 1 + delta) >= msn(d - 1, d + delta));
}

TEST_CASE("simplicial lower bound theorem values", "[bounds]") {
    CHECK(barnette(4, 6) == 8);
    CHECK(barnette(6, 10) == 22);
    for (int d = 2; d <= 9; ++d)
        CHECK(barnette(d, d + 1) == d + 1);
    CHECK_THROWS_AS(barnette(1, 3), Error);
}

TEST_CASE("neighborly facet maxima", "[bounds]") {
    CHECK(neighborly_max_facets(2, 6) == 9);
    CHECK(neighborly_max_facets(2, 8) == 20);
    CHECK(neighborly_max_facets(3, 7) == 7);
    CHECK_THROWS_AS(neighborly_max_facets(1, 5), Error);
    CHECK_THROWS_AS(neighborly_max_facets(2, 4), Error);
    // The formula divides exactly for every admissible pair.
    for (int k = 2; k <= 4; ++k)
        for (int n = 2 * k + 1; n <= 16; ++n)
            CHECK_NOTHROW(neighborly_max_facets(k, n));
}

TEST_CASE("dimension-5 lower bound values", "[bounds]") {
    CHECK(dim5_lower_bound(8) == 10);
    CHECK(dim5_lower_bound(9) == 12);
    CHECK_THROWS_AS(dim5_lower_bound(5), Error);
    for (long long v = 7; v <= 60; ++v)
        CHECK(dim5_lower_bound(v) >= dim5_lower_bound(v - 1));
}

TEST_CASE("known bracket for the general minimum", "[bounds]") {
    const KnownBound d4 = mn_known(4, 10);
    CHECK(d4.exact);
    CHECK(d4.lower == 35);
    CHECK(d4.upper == 35);

    const KnownBound p58 = mn_known(5, 8);
    CHECK(p58.exact);
    CHECK(p58.lower == 12);

    const KnownBound p59 = mn_known(5, 9);
    CHECK(p59.exact);
    CHECK(p59.lower == 16);

    const KnownBound d610 = mn_known(6, 10);
    CHECK_FALSE(d610.exact);
    CHECK(d610.lower == 13);
    CHECK(d610.upper == 14);

    for (int d = 4; d <= 9; ++d) {
        CHECK(mn_known(d, d + 1).lower == d + 1);
        CHECK(mn_known(d, d + 1).exact);
        CHECK(mn_known(d, d + 2).lower == d + 5);
        CHECK(mn_known(d, d + 2).exact);
    }
    for (int d = 5; d <= 9; ++d) {
        CHECK(mn_known(d, d + 3).lower == d + 7);
        CHECK(mn_known(d, d + 3).exact);
    }
    for (int d : {7, 8}) {
        const KnownBound kb = mn_known(d, d + 4);
        CHECK(kb.lower == d + 7);
        CHECK(kb.upper == d + 8);
        CHECK_FALSE(kb.exact);
    }

    const KnownBound k510 = mn_known(5, 10);
    CHECK(k510.lower == 15);
    CHECK(k510.upper == 22);

    const KnownBound k611 = mn_known(6, 11);
    CHECK(k611.lower == 13);
    CHECK(k611.upper == 17);

    CHECK_THROWS_AS(mn_known(3, 6), Error);
    CHECK_THROWS_AS(mn_known(5, 5), Error);
}

TEST_CASE("known brackets are well formed across a grid", "[bounds]") {
    for (int d = 4; d <= 12; ++d)
        for (int v = d + 1; v <= d + 10; ++v) {
            const KnownBound kb = mn_known(d, v);
            CHECK(kb.lower >= 1);
            if (kb.upper)
                CHECK(kb.lower <= *kb.upper);
            if (kb.exact) {
                REQUIRE(kb.upper.has_value());
                CHECK(kb.lower == *kb.upper);
            }
            CHECK_FALSE(kb.source.empty());
        }
}

TEST_CASE("lower bounds hold on the 2-neighborly instances", "[bounds]") {
    struct Row {
        Polytope p;
        int d;
    };
    const Row rows[] = {{example(ExampleName::P58), 5}, {example(ExampleName::P59), 5},
                        {cyclic(5, 8), 5},              {example(ExampleName::P610), 6},
                        {cyclic(6, 9), 6}};
    for (const auto& row : rows) {
        INFO(row.p.label.value_or("?"));
        const FacetSet fs = enumerate_facets(row.p);
        const long long facets = static_cast<long long>(fs.facets.size());
        const long long v = static_cast<long long>(row.p.vertices.size());
        if (row.d == 5)
            CHECK(facets >= dim5_lower_bound(v));
        else
            CHECK(facets >= v);
    }
}

TEST_CASE("known brackets contain the recorded witnesses", "[bounds]") {
    const std::pair<ExampleName, std::pair<int, int>> witnesses[] = {
        {ExampleName::P46, {4, 6}},
        {ExampleName::P58, {5, 8}},
        {ExampleName::P59, {5, 9}},
        {ExampleName::P610, {6, 10}}};
    for (const auto& [name, dv] : witnesses) {
        const Polytope p = example(name);
        const long long facets = static_cast<long long>(enumerate_facets(p).facets.size());
        const KnownBound kb = mn_known(dv.first, dv.second);
        INFO(p.label.value_or("?"));
        CHECK(kb.lower <= facets);
        REQUIRE(kb.upper.has_value());
        CHECK(facets <= *kb.upper);
    }
}

TEST_CASE("parallel-summation convolution identity", "[bounds]") {
    // Checked on the domain gamma <= beta, which is where the g-vector
    // induction applies it (gamma = l+1 <= d/2 < beta = d+1).
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const long long alpha = rng() % 9;
        const long long beta = rng() % 9;
        const long long gamma = rng() % (beta + 1);
        Integer lhs = 0;
        for (long long i = 0; i <= gamma; ++i)
            lhs += binomial(alpha + i, i) * binomial(beta - i, gamma - i);
        CHECK(lhs == binomial(alpha + beta + 1, gamma));
    }
}
