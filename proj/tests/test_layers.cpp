#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dowlingkit/fixtures.hpp"
#include "dowlingkit/invariants.hpp"
#include "dowlingkit/layers.hpp"

using namespace dowlingkit;

TEST_CASE("singular sets of the fixture spaces") {
    FiniteGSpace affine = fixtures::affine_mu_d(5, 2);
    CHECK(affine.n_points() == 5);
    CHECK(affine.singular == std::vector<int>{0});  // only 0 is scaled to itself

    FiniteGSpace gm = fixtures::multiplicative_inversion(7);
    CHECK(gm.n_points() == 6);
    REQUIRE(gm.singular.size() == 2);
    CHECK(gm.points[gm.singular[0]] == "1");
    CHECK(gm.points[gm.singular[1]] == "6");

    FiniteGSpace trans = fixtures::multiplicative_translation(7, 3);
    CHECK(trans.singular.empty());  // free action

    CHECK_THROWS_AS(fixtures::affine_mu_d(5, 3), error);   // 3 does not divide 4
    CHECK_THROWS_AS(fixtures::affine_mu_d(10, 2), error);  // not prime
}

TEST_CASE("fixture spaces model curve actions with cyclic stabilizers") {
    for (const FiniteGSpace& space :
         {fixtures::affine_mu_d(13, 3), fixtures::multiplicative_inversion(11),
          fixtures::multiplicative_translation(13, 4)}) {
        for (int p = 0; p < space.n_points(); ++p) {
            std::vector<int> stab;
            for (int g = 0; g < space.group.order(); ++g)
                if (space.apply(g, p) == p) stab.push_back(g);
            CHECK(is_cyclic_subgroup(space.group, stab));
        }
    }
}

TEST_CASE("defining equations") {
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    DowlingContext ctx = make_context(2, singular_action(space));

    LayerEquations none = defining_equations(space.group, bottom_element(2));
    CHECK(none.diagonal_eqs.empty());
    CHECK(none.point_eqs.empty());

    DowlingElement diag = parse_element(ctx, "[1_e 2_g || ∅]");
    LayerEquations eq = defining_equations(space.group, diag);
    REQUIRE(eq.diagonal_eqs.size() == 2);  // (1,2,g) and the symmetric (2,1,g^{-1})
    CHECK(eq.diagonal_eqs[0].i == 0);
    CHECK(eq.diagonal_eqs[0].j == 1);
    CHECK(eq.diagonal_eqs[0].g == 1);
    CHECK(eq.diagonal_eqs[1].i == 1);
    CHECK(eq.diagonal_eqs[1].j == 0);
    CHECK(eq.diagonal_eqs[1].g == space.group.inv(1));

    DowlingContext ctx1 = make_context(1, singular_action(space));
    LayerEquations pin = defining_equations(space.group, parse_element(ctx1, "[∅ || 1_0]"));
    CHECK(pin.diagonal_eqs.empty());
    REQUIRE(pin.point_eqs.size() == 1);
    CHECK(pin.point_eqs[0].i == 0);
    CHECK(pin.point_eqs[0].s == 0);
}

TEST_CASE("layer points") {
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    DowlingContext ctx = make_context(2, singular_action(space));

    CHECK(layer_points(space, 2, bottom_element(2)).size() == 25);

    // {(x, -x)} over F_5
    auto anti = layer_points(space, 2, parse_element(ctx, "[1_e 2_g || ∅]"));
    REQUIRE(anti.size() == 5);
    for (const auto& t : anti) CHECK((t[0] + t[1]) % 5 == 0);

    auto pinned = layer_points(space, 2, parse_element(ctx, "[∅ || 1_0 2_0]"));
    REQUIRE(pinned.size() == 1);
    CHECK(pinned[0] == std::vector<int>{0, 0});

    CHECK_THROWS_AS(layer_points(space, 12, bottom_element(12)), resource_error);
}

TEST_CASE("layer cardinality law |X|^(n - rk)") {
    for (int n : {1, 2}) {
        for (const FiniteGSpace& space :
             {fixtures::affine_mu_d(5, 2), fixtures::multiplicative_inversion(7)}) {
            DowlingContext ctx = make_context(n, singular_action(space));
            DowlingPoset dp = enumerate_poset(ctx);
            for (int i = 0; i < dp.poset.size(); ++i) {
                std::size_t expected = 1;
                for (int k = 0; k < n - dp.poset.rank(i); ++k)
                    expected *= static_cast<std::size_t>(space.n_points());
                CHECK(layer_points(space, n, dp.elements[i]).size() == expected);
            }
        }
    }
}

TEST_CASE("intersection lemma on a fixture space") {
    FiniteGSpace space = fixtures::multiplicative_inversion(7);
    DowlingContext ctx = make_context(2, singular_action(space));
    // part (2): distinct pins of the same coordinate never meet
    auto h1 = layer_points(space, 2, parse_element(ctx, "[2_e || 1_1]"));
    auto h2 = layer_points(space, 2, parse_element(ctx, "[2_e || 1_6]"));
    for (const auto& t : h1)
        CHECK(std::find(h2.begin(), h2.end(), t) == h2.end());

    // part (3): H_ij(g) ∩ H_jk(h) ⊆ H_ik(hg), checked over all g,h in a
    // three-coordinate space
    DowlingContext ctx3 = make_context(3, singular_action(space));
    const FiniteGroup& G = space.group;
    for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h) {
            int hg = G.mul(h, g);
            for (int x0 = 0; x0 < space.n_points(); ++x0) {
                // x1 = g.x0, x2 = h.x1; the composite must satisfy x2 = hg.x0
                int x1 = space.apply(g, x0);
                int x2 = space.apply(h, x1);
                CHECK(space.apply(hg, x0) == x2);
            }
        }
    }
}

TEST_CASE("orbit configuration counts") {
    FiniteGSpace affine = fixtures::affine_mu_d(5, 2);
    CHECK(orbit_config_count(affine, 2, affine.singular) == 8);
    CHECK(orbit_config_count(affine, 1, affine.singular) ==
          affine.n_points() - static_cast<int>(affine.singular.size()));

    FiniteGSpace gm = fixtures::multiplicative_inversion(7);
    CHECK(orbit_config_count(gm, 2, gm.singular) == 8);

    // removed set must be G-invariant
    CHECK_THROWS_AS(orbit_config_count(gm, 2, {gm.singular[0], 2}), error);
}

TEST_CASE("max layer at a point") {
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    DowlingContext ctx = make_context(2, singular_action(space));

    // distinct free orbits: the bottom
    CHECK(max_layer_at(space, {1, 2}) == bottom_element(2));

    // p = (2, -2): orbit {2,3} shared, transported by g = -1
    CHECK(max_layer_at(space, {2, 3}) == parse_element(ctx, "[1_e 2_g || ∅]"));

    // both singular
    CHECK(max_layer_at(space, {0, 0}) == parse_element(ctx, "[∅ || 1_0 2_0]"));
}

TEST_CASE("max layer is the leq-maximum of the incident layers") {
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    const int n = 2;
    DowlingContext ctx = make_context(n, singular_action(space));
    DowlingPoset dp = enumerate_poset(ctx);
    std::vector<std::vector<std::vector<int>>> pts(dp.elements.size());
    for (std::size_t i = 0; i < dp.elements.size(); ++i)
        pts[i] = layer_points(space, n, dp.elements[i]);

    std::vector<int> tuple(n, 0);
    for (int a = 0; a < space.n_points(); ++a) {
        for (int b = 0; b < space.n_points(); ++b) {
            std::vector<int> p = {a, b};
            DowlingElement m = max_layer_at(space, p);
            int mid = dp.index_of(m);
            REQUIRE(mid >= 0);
            CHECK(std::find(pts[mid].begin(), pts[mid].end(), p) != pts[mid].end());
            for (std::size_t i = 0; i < dp.elements.size(); ++i) {
                bool incident = std::find(pts[i].begin(), pts[i].end(), p) != pts[i].end();
                if (incident) CHECK(leq(ctx, dp.elements[i], m));
            }
        }
    }
}

TEST_CASE("the layer realization is equivariant") {
    // the layer of w.e is the w-translate of the layer of e, where the wreath
    // element permutes coordinates and acts pointwise
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    DowlingContext ctx = make_context(2, singular_action(space));
    DowlingPoset dp = enumerate_poset(ctx);
    std::vector<WreathElement> ws;
    for (int g0 : {0, 1})
        for (int g1 : {0, 1})
            for (bool swap : {false, true}) {
                WreathElement w = wreath_identity(2);
                w.gs = {g0, g1};
                if (swap) std::swap(w.sigma[0], w.sigma[1]);
                ws.push_back(std::move(w));
            }
    for (const auto& w : ws) {
        for (const auto& e : dp.elements) {
            auto lhs = layer_points(space, 2, act(ctx, w, e));
            std::vector<std::vector<int>> rhs;
            for (const auto& t : layer_points(space, 2, e)) {
                std::vector<int> moved(2);
                for (int i = 0; i < 2; ++i) moved[w.sigma[i]] = space.apply(w.gs[i], t[i]);
                rhs.push_back(std::move(moved));
            }
            std::sort(rhs.begin(), rhs.end());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("local arrangement at a point: Whitney dims of the incident interval") {
    // the germ at p is governed by [0̂, max_layer_at(p)]; at the doubly
    // singular point of the affine mu_2 model that interval is a Dowling
    // lattice D_2(Z_2) with Whitney dimensions (1+t)(1+3t)
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    DowlingContext ctx = make_context(2, singular_action(space));
    DowlingPoset dp = enumerate_poset(ctx);
    int top = dp.index_of(max_layer_at(space, {0, 0}));
    REQUIRE(top >= 0);
    RankedPoset germ = interval(dp.poset, dp.poset.bottom(), top);
    CHECK(whitney_ranks(germ) == std::vector<long long>{1, 4, 3});
    IntPolynomial hilbert = whitney_hilbert(2, 2, 1);
    for (int r = 0; r <= 2; ++r)
        CHECK(hilbert.coeff(r) == whitney_ranks(germ)[r]);
}

TEST_CASE("incidence verification") {
    IncidenceReport r7 = verify_incidence(fixtures::multiplicative_inversion(7), 2);
    CHECK(r7.confirmed);
    CHECK_FALSE(r7.inconclusive);
    CHECK(r7.n_elements == 11);

    IncidenceReport r5 = verify_incidence(fixtures::affine_mu_d(5, 2), 2);
    CHECK(r5.confirmed);

    // a one-point space collapses everything: inconclusive, not failed
    FiniteGroup z2 = cyclic_group(2);
    FiniteGSpace tiny = make_space({"p"}, z2, {{0}, {0}});
    IncidenceReport r1 = verify_incidence(tiny, 2);
    CHECK(r1.inconclusive);
    CHECK(r1.n_collisions > 0);
}

TEST_CASE("space json round trip") {
    FiniteGSpace space = fixtures::affine_mu_d(5, 2);
    nlohmann::json j = space_to_json(space);
    FiniteGSpace back = space_from_json(j);
    CHECK(back.points == space.points);
    CHECK(back.act == space.act);
    CHECK(back.singular == space.singular);
}
