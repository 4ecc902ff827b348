#pragma once

#include <string>
#include <vector>

#include "dowlingkit/dowling.hpp"

namespace dowlingkit {

/// An element (g_1,...,g_n, sigma) of the wreath product G wr S_n.
struct WreathElement {
    std::vector<int> gs;     // group element per coordinate
    std::vector<int> sigma;  // permutation, sigma[j] = image of j
};

WreathElement wreath_identity(int n);

/// Product chosen so that `act` below is a left action:
/// (g,sigma)*(h,tau) = ((g_{tau(j)} h_j)_j, sigma∘tau).
WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b);

/// The action on D_n(G,S): members move by sigma, block colors pick up
/// b'(sigma(j)) = g_j b(j), zero colors z'(sigma(j)) = g_j.z(j). Result is
/// canonicalized; the action preserves rank and order.
DowlingElement act(const DowlingContext& ctx, const WreathElement& w, const DowlingElement& e);

/// An O(S)-labeled partition of n: weakly decreasing unlabeled parts plus one
/// nonnegative labeled part per orbit (zero meaning the label is unused).
struct LabeledPartition {
    std::vector<int> unlabeled;
    std::vector<int> labeled;  // indexed by orbit

    int total() const;
    int rank(int n) const { return n - static_cast<int>(unlabeled.size()); }

    auto operator<=>(const LabeledPartition&) const = default;
};

/// Paper-style rendering, e.g. "(2 || 0)" or "(0 || 1_e, 1_w)"; orbit names
/// are the representatives' point identifiers.
std::string render(const LabeledPartition& lp, const std::vector<std::string>& orbit_names);
std::vector<std::string> orbit_names(const DowlingContext& ctx);

/// The orbit invariant pi_n: block sizes sorted decreasing, plus the zero
/// fiber size per orbit.
LabeledPartition orbit_label(const DowlingContext& ctx, const DowlingElement& e);

/// All O-labeled partitions of n over `n_orbits` orbits, excluding those with
/// a labeled part equal to 1 for a forbidden orbit. Sorted canonically.
std::vector<LabeledPartition> labeled_partitions(int n, int n_orbits,
                                                 const std::vector<int>& forbidden_singleton_orbits);

/// Partition of an enumerated poset's elements into wreath-product orbits, by
/// closure under {coordinate insertions of group generators} ∪ {adjacent
/// transpositions}. Orbits are listed by smallest member and sorted within.
struct WreathOrbitPartition {
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of;
};

WreathOrbitPartition orbits_bruteforce(const DowlingContext& ctx, const DowlingPoset& dp);

/// The quotient of an enumerated poset by the wreath action, ordered as the
/// image order of pi_n: lambda <= lambda' iff some fiber elements are
/// comparable. Elements carry their labeled partitions; poset labels are the
/// rendered forms.
struct QuotientPoset {
    RankedPoset poset;
    std::vector<LabeledPartition> labels;
};

QuotientPoset quotient_poset(const DowlingContext& ctx, const DowlingPoset& dp);

}  // namespace dowlingkit
