#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dowlingkit/fixtures.hpp"
#include "dowlingkit/dowling.hpp"
#include "dowlingkit/group.hpp"

using namespace dowlingkit;

TEST_CASE("cyclic groups") {
    FiniteGroup z1 = cyclic_group(1);
    CHECK(z1.order() == 1);
    CHECK(z1.identity == 0);

    FiniteGroup z6 = cyclic_group(6);
    CHECK(z6.order() == 6);
    // the canonical generator has order 6
    int x = 1, steps = 0;
    do {
        x = z6.mul(x, 1);
        ++steps;
    } while (x != 1);
    CHECK(steps == 6);

    FiniteGroup z4 = cyclic_group(4);
    int sq = z4.mul(1, 1);
    CHECK(z4.mul(sq, sq) == z4.identity);  // g^2 has order 2

    CHECK_THROWS_AS(cyclic_group(0), error);
}

TEST_CASE("group table validation") {
    // constant table: no identity
    CHECK_THROWS_AS(make_group("bad", {"a", "b"}, {{0, 0}, {0, 0}}), error);
    // duplicate identifiers
    CHECK_THROWS_AS(make_group("bad", {"a", "a"}, {{0, 1}, {1, 0}}), error);
    // non-associative magma with two-sided identity (element 0)
    std::vector<std::vector<int>> t = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    CHECK_THROWS_AS(make_group("bad", {"e", "a", "b", "c", "d"}, t), error);
}

TEST_CASE("orbit data for the hexagonal action") {
    FiniteGroup z6 = cyclic_group(6);
    GSetAction a = fixtures::action_by_name(z6, "hexagonal");
    OrbitData od = orbit_data(a);
    REQUIRE(od.n_orbits() == 3);
    CHECK(od.orbits[0] == std::vector<int>{0});
    CHECK(od.orbits[1] == std::vector<int>{1, 2, 3});
    CHECK(od.orbits[2] == std::vector<int>{4, 5});
    CHECK(od.stabilizer[0].size() == 6);
    CHECK(od.stabilizer[1].size() == 2);
    CHECK(od.stabilizer[2].size() == 3);
}

TEST_CASE("orbit data for the square action") {
    FiniteGroup z4 = cyclic_group(4);
    GSetAction a = fixtures::action_by_name(z4, "square");
    OrbitData od = orbit_data(a);
    REQUIRE(od.n_orbits() == 3);
    CHECK(od.stabilizer[0].size() == 4);
    CHECK(od.stabilizer[1].size() == 2);
    CHECK(od.stabilizer[2].size() == 4);
}

TEST_CASE("trivial group makes every point its own orbit") {
    FiniteGroup z1 = cyclic_group(1);
    GSetAction a = trivial_action(z1, {"a", "b", "c"});
    OrbitData od = orbit_data(a);
    CHECK(od.n_orbits() == 3);
    for (int o = 0; o < 3; ++o) CHECK(od.stabilizer[o].size() == 1);
}

TEST_CASE("orbit-stabilizer and transporter laws hold on every fixture") {
    for (const char* gname : {"Z1", "Z2", "Z3", "Z4", "Z6"}) {
        FiniteGroup g = fixtures::group_by_name(gname);
        for (const auto& aname : fixtures::action_names_for(g)) {
            GSetAction a = fixtures::action_by_name(g, aname);
            OrbitData od = orbit_data(a);
            for (int o = 0; o < od.n_orbits(); ++o) {
                CHECK(od.orbits[o].size() * od.stabilizer[o].size() ==
                      static_cast<std::size_t>(g.order()));
                CHECK(od.rep[o] == od.orbits[o].front());
                // stabilizer is closed under the table
                for (int x : od.stabilizer[o])
                    for (int y : od.stabilizer[o])
                        CHECK(std::binary_search(od.stabilizer[o].begin(),
                                                 od.stabilizer[o].end(), g.mul(x, y)));
            }
            for (int p = 0; p < a.n_points(); ++p)
                CHECK(a.apply(od.transporter[p], od.rep[od.orbit_of[p]]) == p);
        }
    }
}

TEST_CASE("identifiers with reserved characters are rejected") {
    CHECK_THROWS_AS(make_group("bad", {"e", "a b"}, {{0, 1}, {1, 0}}), error);
    CHECK_THROWS_AS(make_group("bad", {"e", "a|b"}, {{0, 1}, {1, 0}}), error);
    FiniteGroup z2 = cyclic_group(2);
    CHECK_THROWS_AS(trivial_action(z2, {"[x]"}), error);
    CHECK_THROWS_AS(trivial_action(z2, {""}), error);
    // underscores are fine: parsing splits entries at the first one only
    GSetAction a = trivial_action(z2, {"s_1", "s_2"});
    DowlingContext ctx = make_context(2, a);
    DowlingElement e = parse_element(ctx, "[1_e || 2_s_2]");
    CHECK(render(ctx, e) == "[1_e || 2_s_2]");
}

TEST_CASE("action axiom violations are rejected") {
    FiniteGroup z2 = cyclic_group(2);
    // identity row broken
    CHECK_THROWS_AS(make_action(z2, {"a", "b"}, {{1, 0}, {0, 1}}), error);
    // not compatible with the group law: g.g.a != a
    CHECK_THROWS_AS(make_action(z2, {"a", "b", "c"}, {{0, 1, 2}, {1, 2, 0}}), error);
}

TEST_CASE("subgroup machinery") {
    FiniteGroup z6 = cyclic_group(6);
    std::vector<int> even = subgroup_closure(z6, {2});
    CHECK(even == std::vector<int>{0, 2, 4});
    FiniteGroup z3 = subgroup_as_group(z6, even);
    CHECK(z3.order() == 3);
    CHECK(z3.elements[0] == "e");
    CHECK(is_cyclic_subgroup(z6, even));
    CHECK(minimal_generators(z6) == std::vector<int>{1});
    CHECK(minimal_generators(cyclic_group(1)).empty());
    CHECK_THROWS_AS(subgroup_as_group(z6, {0, 2}), error);  // not closed
}

TEST_CASE("group and action JSON round trip") {
    FiniteGroup z4 = cyclic_group(4);
    GSetAction a = fixtures::action_by_name(z4, "square");
    nlohmann::json j = action_to_json(a);
    GSetAction back = action_from_json(j);
    CHECK(back.points == a.points);
    CHECK(back.act == a.act);
    CHECK(back.group.table == a.group.table);
}
