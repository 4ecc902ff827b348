#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dowlingkit/fixtures.hpp"
#include "dowlingkit/invariants.hpp"

using namespace dowlingkit;

namespace {

DowlingContext fixture_ctx(const std::string& gname, const std::string& aname, int n) {
    FiniteGroup g = fixtures::group_by_name(gname);
    return make_context(n, fixtures::action_by_name(g, aname));
}

IntPolynomial poly(std::vector<long long> ascending, std::string var = "t") {
    std::vector<BigInt> c(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(c), std::move(var));
}

}  // namespace

TEST_CASE("factored characteristic polynomials match the printed examples") {
    CHECK(char_poly_factored(3, 6, 6) == poly({-1296, 396, -36, 1}));
    CHECK(char_poly_factored(4, 6, 6) == poly({31104, -10800, 1260, -60, 1}));
    CHECK(char_poly_factored(2, 4, 4) == poly({32, -12, 1}));
    CHECK(char_poly_factored(4, 4, 4) == poly({6144, -3200, 560, -40, 1}));
    CHECK(char_poly_factored(1, 5, 3) == poly({-3, 1}));  // t - k
    // empty S: prod_{i=1}^{n-1} (t - |G| i)
    CHECK(char_poly_factored(3, 2, 0) == poly({8, -6, 1}));
    CHECK(char_poly_factored(1, 2, 0) == poly({1}));
}

TEST_CASE("whitney hilbert series") {
    CHECK(whitney_hilbert(2, 6, 6) == poly({1, 18, 72}));
    CHECK(whitney_hilbert(1, 3, 5) == poly({1, 5}));
    CHECK(whitney_hilbert(2, 2, 2) == poly({1, 6, 8}));
    CHECK_THROWS_AS(whitney_hilbert(2, 2, 0), error);
}

TEST_CASE("whitney hilbert series is the (-t)^n chi(-1/t) specialization") {
    for (int n = 1; n <= 5; ++n) {
        for (int size_g : {1, 2, 4, 6}) {
            for (int size_s : {1, 2, 5}) {
                IntPolynomial chi = char_poly_factored(n, size_g, size_s);
                IntPolynomial wh = whitney_hilbert(n, size_g, size_s);
                // coefficient of t^{n-k} in (-t)^n chi(-1/t) is (-1)^{n+k} a_k
                for (int k = 0; k <= n; ++k) {
                    BigInt lhs = wh.coeff(n - k);
                    BigInt rhs = chi.coeff(k) * ((n + k) % 2 == 0 ? 1 : -1);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("dowling homology dimension") {
    CHECK(dowling_homology_dim(1, 3) == 1);
    CHECK(dowling_homology_dim(2, 4) == 5);
    CHECK(dowling_homology_dim(3, 2) == 15);
    // cross-check |mu(0,1)| on the enumerated Dowling lattices
    for (const auto& [d, n] : {std::pair{4, 2}, {2, 3}, {6, 3}}) {
        DowlingContext ctx = fixture_ctx("Z" + std::to_string(d), "trivial1", n);
        DowlingPoset dp = enumerate_poset(ctx);
        MobiusTable mob = mobius_table(dp.poset);
        auto tops = dp.poset.elements_of_rank(n);
        REQUIRE(tops.size() == 1);
        CHECK(BigInt(std::llabs(mob.mu[tops[0]])) == dowling_homology_dim(n, d));
    }
}

TEST_CASE("rep decomposition of the type C toric poset") {
    DowlingContext ctx = fixture_ctx("Z2", "trivial2", 2);

    auto r0 = rep_decomposition(ctx, 0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].induced_dim == 1);
    CHECK(r0[0].label.unlabeled == std::vector<int>{1, 1});

    auto r1 = rep_decomposition(ctx, 1);
    REQUIRE(r1.size() == 3);
    BigInt total = 0;
    for (const auto& s : r1) {
        CHECK(s.stabilizer_order == 4);
        CHECK(s.inner_dim == 1);
        CHECK(s.induced_dim == 2);
        total += s.induced_dim;
    }
    CHECK(total == 6);

    auto r2 = rep_decomposition(ctx, 2);
    BigInt total2 = 0;
    for (const auto& s : r2) total2 += s.induced_dim;
    CHECK(total2 == 8);
}

TEST_CASE("rep decomposition dimension sums equal the hilbert coefficients") {
    for (const auto& [gname, aname, n] :
         {std::tuple{"Z6", "hexagonal", 2}, {"Z4", "square", 3}, {"Z2", "signflip", 3},
          {"Z3", "regular", 2}}) {
        DowlingContext ctx = fixture_ctx(gname, aname, n);
        IntPolynomial hilbert = whitney_hilbert(n, ctx.group().order(), ctx.n_points());
        for (int r = 0; r <= n; ++r) {
            BigInt total = 0;
            for (const auto& s : rep_decomposition(ctx, r)) {
                total += s.induced_dim;
                CHECK(s.induced_dim % s.inner_dim == 0);
            }
            CHECK(total == hilbert.coeff(r));
        }
    }
    // the hexagonal rank-2 sum is the printed 72
    DowlingContext hex = fixture_ctx("Z6", "hexagonal", 2);
    BigInt total = 0;
    for (const auto& s : rep_decomposition(hex, 2)) total += s.induced_dim;
    CHECK(total == 72);
}

TEST_CASE("e1 hilbert series") {
    // P(u) = 1 + u over the type C toric arrangement collapses to
    // prod_{i=1}^{n} (1 + (1+2i)t) after substituting u -> t
    for (int n = 1; n <= 4; ++n) {
        BivariatePoly e1 = e1_hilbert(poly({1, 1}, "u"), n, 2, 2);
        IntPolynomial collapsed(BigInt(0), "t");
        IntPolynomial t = IntPolynomial::variable("t");
        IntPolynomial tpow(BigInt(1), "t");
        for (int k = 0; k <= e1.degree_t(); ++k) {
            collapsed += e1.coeff_t(k).eval(t) * tpow;
            tpow *= t;
        }
        IntPolynomial expected(BigInt(1), "t");
        for (int i = 1; i <= n; ++i) expected *= poly({1, 1 + 2 * i});
        CHECK(collapsed == expected);
    }

    BivariatePoly triv = e1_hilbert(poly({1}, "u"), 1, 1, 3);
    CHECK(triv.coeff_t(0) == poly({1}, "u"));
    CHECK(triv.coeff_t(1) == poly({3}, "u"));
    CHECK_THROWS_AS(e1_hilbert(poly({1}, "u"), 2, 2, 0), error);

    // t = u = -1 equals the Euler specialization of the motive
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : {poly({1, 1}, "u"), poly({2, 0, 1}, "u"), poly({0, 1}, "u")}) {
            for (int size_g : {1, 2, 3}) {
                for (int size_s : {1, 2}) {
                    BivariatePoly e1 = e1_hilbert(p, n, size_g, size_s);
                    CHECK(e1.eval(-1, -1) == motive_eval(p.eval(BigInt(-1)), n, size_g, size_s));
                }
            }
        }
    }
}

TEST_CASE("motive evaluation") {
    CHECK(motive_eval(BigInt(7 - 1), 2, 2, 2) == 8);  // q=7 inversion example
    // Euler characteristic families
    for (int n = 1; n <= 6; ++n) {
        CHECK(motive_eval(BigInt(0), n, 2, 2) == int_pow(-2, n) * factorial(n));
        CHECK(motive_eval(BigInt(0), n, 2, 4) == int_pow(-2, n) * factorial(n + 1));
        CHECK(motive_eval(BigInt(0), n, 6, 6) == int_pow(-6, n) * factorial(n));
        CHECK(motive_eval(BigInt(0), n, 4, 4) == int_pow(-4, n) * factorial(n));
    }
    // polynomial substitution expands the formal product
    IntPolynomial X = IntPolynomial::variable("X");
    CHECK(motive_eval(X, 2, 2, 2) == IntPolynomial(std::vector<BigInt>{8, -6, 1}, "X"));
    // integer evaluation agrees with the Möbius sum over the enumerated poset
    for (const auto& [gname, aname, n] :
         {std::tuple{"Z2", "trivial2", 2}, {"Z4", "square", 2}, {"Z1", "empty", 3}}) {
        DowlingContext ctx = fixture_ctx(gname, aname, n);
        DowlingPoset dp = enumerate_poset(ctx);
        for (int x : {-3, 0, 1, 5, 11}) {
            CHECK(poset_motive_eval(dp.poset, n, BigInt(x)) ==
                  motive_eval(BigInt(x), n, ctx.group().order(), ctx.n_points()));
        }
    }
}

TEST_CASE("euler binomial form") {
    // 2! * 4 * binom(-2, 2) = 24 = (-2)^2 (2+1)!
    CHECK(euler_binomial_form(BigInt(0), 2, 2, 4) == 24);
    CHECK(euler_binomial_form(BigInt(0), 2, 2, 4) == int_pow(-2, 2) * factorial(3));
    // binomial top zero
    for (int n = 1; n <= 4; ++n) CHECK(euler_binomial_form(BigInt(3), n, 2, 3) == 0);
    // agreement with the product on a grid, including rational binomial tops
    for (int xc = -7; xc <= 7; ++xc)
        for (int n = 1; n <= 4; ++n)
            for (int size_g : {1, 2, 3, 4})
                for (int size_s : {0, 1, 2, 5})
                    CHECK(euler_binomial_form(BigInt(xc), n, size_g, size_s) ==
                          motive_eval(BigInt(xc), n, size_g, size_s));
}

TEST_CASE("polynomial printing and json") {
    CHECK(char_poly_factored(2, 6, 6).str() == "t^2 - 18t + 72");
    CHECK(poly({0}).str() == "0");
    CHECK(poly({-1, 1}).str() == "t - 1");
    CHECK(poly({0, 0, -2}).str() == "-2t^2");
    nlohmann::json j = char_poly_factored(2, 6, 6).to_json();
    CHECK(j["variable"] == "t");
    CHECK(j["coefficients"] == nlohmann::json({72, -18, 1}));
}
