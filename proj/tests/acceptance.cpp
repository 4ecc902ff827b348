// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "dowlingkit/fixtures.hpp"
#include "dowlingkit/invariants.hpp"
#include "dowlingkit/verify.hpp"

using namespace dowlingkit;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string what) : number_(number), what_(std::move(what)) {
        start_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const std::string& detail) {
        if (!ok && failure_.empty()) failure_ = detail;
        ok_ = ok_ && ok;
    }

    void require_checks(const std::vector<CheckResult>& results) {
        for (const auto& r : results) require(r.pass, r.name + " " + r.detail);
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << " (" << ms
                  << " ms): " << what_;
        if (!ok_) {
            std::cout << " -- " << failure_;
            ++g_failures;
        }
        std::cout << std::endl;
    }

private:
    int number_;
    std::string what_;
    bool ok_ = true;
    std::string failure_;
    std::chrono::steady_clock::time_point start_;
};

DowlingContext fixture_ctx(const std::string& gname, const std::string& aname, int n) {
    FiniteGroup g = fixtures::group_by_name(gname);
    return make_context(n, fixtures::action_by_name(g, aname));
}

IntPolynomial poly(std::vector<long long> ascending) {
    std::vector<BigInt> c(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(c), "t");
}

void criterion1_paper_polynomials() {
    Criterion c(1, "paper-number characteristic polynomial regressions");
    const struct {
        const char* group;
        const char* action;
        int n;
        std::vector<long long> coeffs;  // ascending
    } cases[] = {
        {"Z6", "hexagonal", 2, {72, -18, 1}},
        {"Z6", "hexagonal", 3, {-1296, 396, -36, 1}},
        {"Z6", "hexagonal", 4, {31104, -10800, 1260, -60, 1}},
        {"Z4", "square", 2, {32, -12, 1}},
        {"Z4", "square", 3, {-384, 176, -24, 1}},
        {"Z4", "square", 4, {6144, -3200, 560, -40, 1}},
    };
    for (const auto& k : cases) {
        auto t0 = std::chrono::steady_clock::now();
        DowlingContext ctx = fixture_ctx(k.group, k.action, k.n);
        DowlingPoset dp = enumerate_poset(ctx);
        IntPolynomial brute = char_poly_bruteforce(dp.poset, k.n);
        IntPolynomial closed = char_poly_factored(k.n, ctx.group().order(), ctx.n_points());
        IntPolynomial pinned = poly(k.coeffs);
        std::string name = std::string(k.group) + "/" + k.action + "/n=" + std::to_string(k.n);
        c.require(brute == pinned, name + " brute " + brute.str());
        c.require(closed == pinned, name + " closed " + closed.str());
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        c.require(ms < 1000, name + " took " + std::to_string(ms) + " ms (limit 1000)");
    }
}

void criterion2_oracle_equivalence(const std::vector<CheckResult>& charpoly_results,
                                   long long total_ms) {
    Criterion c(2, "oracle equivalence of brute and factored char polys on the grid");
    c.require_checks(charpoly_results);
    c.require(total_ms < 60000,
              "grid build + checks took " + std::to_string(total_ms) + " ms (limit 60000)");
}

void criterion3_figure_regressions() {
    Criterion c(3, "Figure-1 poset and hexagonal maximal-element regressions");
    DowlingContext ctx = fixture_ctx("Z2", "trivial2", 2);
    DowlingPoset dp = enumerate_poset(ctx);
    c.require(dp.poset.size() == 11, "type C poset has " + std::to_string(dp.poset.size()));
    c.require(dp.poset.elements_of_rank(0).size() == 1, "rank 0 size");
    c.require(dp.poset.elements_of_rank(1).size() == 6, "rank 1 size");
    c.require(dp.poset.elements_of_rank(2).size() == 4, "rank 2 size");

    // Figure 1 edges, written in this library's canonical rendering (the
    // figure's identity subscript 1 is "e" here, iota is "g")
    const char* bot = "[1_e | 2_e || ∅]";
    std::set<std::pair<std::string, std::string>> expected;
    for (const char* atom : {"[1_e 2_e || ∅]", "[1_e 2_g || ∅]", "[1_e || 2_1]",
                             "[1_e || 2_-1]", "[2_e || 1_1]", "[2_e || 1_-1]"})
        expected.insert({bot, atom});
    auto edge = [&](const char* lo, const char* hi) { expected.insert({lo, hi}); };
    edge("[1_e || 2_1]", "[∅ || 1_1 2_1]");
    edge("[2_e || 1_1]", "[∅ || 1_1 2_1]");
    edge("[1_e 2_e || ∅]", "[∅ || 1_1 2_1]");
    edge("[1_e 2_g || ∅]", "[∅ || 1_1 2_1]");
    edge("[1_e || 2_-1]", "[∅ || 1_-1 2_-1]");
    edge("[2_e || 1_-1]", "[∅ || 1_-1 2_-1]");
    edge("[1_e 2_e || ∅]", "[∅ || 1_-1 2_-1]");
    edge("[1_e 2_g || ∅]", "[∅ || 1_-1 2_-1]");
    edge("[1_e || 2_-1]", "[∅ || 1_1 2_-1]");
    edge("[2_e || 1_1]", "[∅ || 1_1 2_-1]");
    edge("[1_e || 2_1]", "[∅ || 1_-1 2_1]");
    edge("[2_e || 1_-1]", "[∅ || 1_-1 2_1]");

    std::set<std::pair<std::string, std::string>> got;
    for (auto [lo, hi] : dp.poset.covers())
        got.insert({dp.poset.label(lo), dp.poset.label(hi)});
    c.require(got == expected, "cover set differs from Figure 1");

    DowlingPoset hex = enumerate_poset(fixture_ctx("Z6", "hexagonal", 2));
    std::size_t maximal = 0;
    for (int i = 0; i < hex.poset.size(); ++i)
        if (hex.poset.rank(i) == 2 && hex.poset.upper_covers_of(i).empty()) ++maximal;
    c.require(maximal == 36,
              "hexagonal D_2 has " + std::to_string(maximal) + " maximal rank-2 elements");
}

void criterion4_covering_counts(const std::vector<GridInstance>& grid, std::uint64_t seed) {
    Criterion c(4, "covering-count law l|S| + C(l,2)|G| across the grid");
    c.require_checks(verify_covering_law(grid, seed));
}

void criterion5_orbit_theorem(const std::vector<GridInstance>& grid) {
    Criterion c(5, "wreath orbits equal the labeled-partition fibers");
    c.require_checks(verify_orbit_theorem(grid, 3));
    DowlingContext typec = fixture_ctx("Z2", "trivial2", 2);
    DowlingPoset dp = enumerate_poset(typec);
    c.require(orbits_bruteforce(typec, dp).orbits.size() == 7, "type C orbit count");
    DowlingContext hex = fixture_ctx("Z6", "hexagonal", 2);
    DowlingPoset hexdp = enumerate_poset(hex);
    c.require(orbits_bruteforce(hex, hexdp).orbits.size() == 11, "hexagonal orbit count");
}

void criterion6_interval_decomposition(const std::vector<GridInstance>& grid) {
    Criterion c(6, "interval char polys factor per the local-structure theorem");
    c.require_checks(verify_interval_decomposition(grid));

    // the two overlapping intervals of the square poset match the enumerated
    // D_2(Z_2) and D_2(Z_4) rank for rank
    DowlingContext sq = fixture_ctx("Z4", "square", 2);
    DowlingPoset dp = enumerate_poset(sq);
    DowlingPoset d2z2 = enumerate_poset(fixture_ctx("Z2", "trivial1", 2));
    DowlingPoset d2z4 = enumerate_poset(fixture_ctx("Z4", "trivial1", 2));
    int zz = dp.index_of(parse_element(sq, "[∅ || 1_z1 2_z2]"));
    int tt = dp.index_of(parse_element(sq, "[∅ || 1_t 2_t]"));
    c.require(zz >= 0 && tt >= 0, "figure elements not found");
    RankedPoset i1 = interval(dp.poset, dp.poset.bottom(), zz);
    RankedPoset i2 = interval(dp.poset, dp.poset.bottom(), tt);
    for (int r = 0; r <= 2; ++r) {
        c.require(i1.elements_of_rank(r).size() == d2z2.poset.elements_of_rank(r).size(),
                  "interval under [||1_z1 2_z2] rank " + std::to_string(r));
        c.require(i2.elements_of_rank(r).size() == d2z4.poset.elements_of_rank(r).size(),
                  "interval under [||1_t 2_t] rank " + std::to_string(r));
    }
}

void criterion7_whitney(const std::vector<GridInstance>& grid) {
    Criterion c(7, "Whitney homology dimensions and representation sums");
    c.require_checks(verify_whitney(grid));
    // dim H_{n-2}(D_n(G)) = prod (1 + j|G|) for n <= 4, |G| <= 6
    for (int d = 1; d <= 6; ++d) {
        for (int n = 1; n <= 4; ++n) {
            DowlingContext ctx = fixture_ctx("Z" + std::to_string(d), "trivial1", n);
            DowlingPoset dp = enumerate_poset(ctx);
            MobiusTable mob = mobius_table(dp.poset);
            auto tops = dp.poset.elements_of_rank(n);
            c.require(tops.size() == 1, "Dowling lattice must have a unique top");
            BigInt dim = mob.mu[tops[0]] < 0 ? BigInt(-mob.mu[tops[0]]) : BigInt(mob.mu[tops[0]]);
            c.require(dim == dowling_homology_dim(n, d),
                      "dim H(D_" + std::to_string(n) + "(Z" + std::to_string(d) + "))");
        }
    }
}

void criterion8_finite_field_counts() {
    Criterion c(8, "finite-field orbit configuration counts match the motive");
    auto t0 = std::chrono::steady_clock::now();
    c.require_checks(verify_finite_field_counts());
    FiniteGSpace gm = fixtures::multiplicative_inversion(7);
    c.require(orbit_config_count(gm, 2, gm.singular) == 8, "pinned q=7 inversion n=2 count");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    c.require(ms < 10000, "counts took " + std::to_string(ms) + " ms (limit 10000)");
}

void criterion9_euler_identities() {
    Criterion c(9, "Euler-characteristic identities and the binomial form");
    c.require_checks(verify_euler_identities());
}

void criterion10_subposets() {
    Criterion c(10, "DD_n(Z2) atom counts and the pinned DD_3 char poly");
    c.require_checks(verify_subposet_suite(kDefaultEnumerationCap));
}

}  // namespace

int main() {
    criterion1_paper_polynomials();

    auto t0 = std::chrono::steady_clock::now();
    std::vector<GridInstance> grid = build_verification_grid(4, kDefaultEnumerationCap);
    std::vector<CheckResult> charpoly_results = verify_charpoly(grid);
    long long grid_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();

    criterion2_oracle_equivalence(charpoly_results, grid_ms);
    criterion3_figure_regressions();
    criterion4_covering_counts(grid, 12345);
    criterion5_orbit_theorem(grid);
    criterion6_interval_decomposition(grid);
    criterion7_whitney(grid);
    criterion8_finite_field_counts();
    criterion9_euler_identities();
    criterion10_subposets();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
