#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dowlingkit/dowling.hpp"
#include "dowlingkit/invariants.hpp"
#include "dowlingkit/layers.hpp"

namespace dowlingkit {

/// One enumerated fixture instance of the cross-validation grid.
struct GridInstance {
    std::string name;  // e.g. "Z6/hexagonal/n=3"
    std::string action_name;
    int n = 0;
    DowlingContext ctx;
    DowlingPoset dp;
    MobiusTable mob;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Fixture grid: G in {Z1,Z2,Z3,Z4,Z6} x named actions x n in 1..max_n.
std::vector<GridInstance> build_verification_grid(int max_n, std::size_t cap);

/// Brute Möbius characteristic polynomial vs the factored closed form.
std::vector<CheckResult> verify_charpoly(const std::vector<GridInstance>& grid);

/// Every rank n-l element has exactly l|S| + C(l,2)|G| covers; exhaustive for
/// n <= 3, sampled (>= 200 elements, seeded) for n = 4.
std::vector<CheckResult> verify_covering_law(const std::vector<GridInstance>& grid,
                                             std::uint64_t seed);

/// leq agrees with cover-graph reachability; full for n <= 3, sampled n = 4.
std::vector<CheckResult> verify_leq_reachability(const std::vector<GridInstance>& grid,
                                                 std::uint64_t seed);

/// Brute wreath orbits coincide with the fibers of orbit_label (n <= cutoff).
std::vector<CheckResult> verify_orbit_theorem(const std::vector<GridInstance>& grid,
                                              int n_cutoff = 3);

/// Brute char poly of [0̂,e] equals the product of the factors' closed forms,
/// for every element of every instance.
std::vector<CheckResult> verify_interval_decomposition(const std::vector<GridInstance>& grid);

/// whitney_hilbert == |mu|-sums by rank and rep_decomposition dimension sums
/// == those coefficients (instances with nonempty S only).
std::vector<CheckResult> verify_whitney(const std::vector<GridInstance>& grid);

/// Finite-field point counts vs motive_eval on the built-in spaces.
std::vector<CheckResult> verify_finite_field_counts();

/// Euler-characteristic specializations and the binomial identity grid.
std::vector<CheckResult> verify_euler_identities();

/// DD_n(Z2) atom counts and the pinned DD_3(Z2) characteristic polynomial.
std::vector<CheckResult> verify_subposet_suite(std::size_t cap);

/// The whole grid; nonzero-failure results make the CLI verify command exit 1.
std::vector<CheckResult> run_verification(int max_n, std::uint64_t seed, std::size_t cap);

}  // namespace dowlingkit
