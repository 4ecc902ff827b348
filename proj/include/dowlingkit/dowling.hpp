#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dowlingkit/group.hpp"
#include "dowlingkit/poset.hpp"

namespace dowlingkit {

/// Default frontier/total cap for poset enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 200000;

/// One block of a partial G-partition: a sorted member set with a parallel
/// G-coloring. Canonical form pins colors[0] (the color of the smallest
/// member) to the group identity, which turns projectivized-coloring equality
/// into structural equality.
struct DowlingBlock {
    std::vector<int> members;  // ascending ground indices (0-based)
    std::vector<int> colors;   // parallel group element indices

    auto operator<=>(const DowlingBlock&) const = default;
};

/// An element of the S-Dowling poset D_n(G,S): a partial G-partition of
/// {0..n-1} together with an S-coloring of the leftover zero block. Always
/// kept in canonical form: blocks sorted by smallest member, members sorted
/// within each block, colors normalized, zero block sorted.
struct DowlingElement {
    int n = 0;
    std::vector<DowlingBlock> blocks;
    std::vector<int> zero_members;  // ascending
    std::vector<int> zero_colors;   // parallel S point indices

    int n_blocks() const { return static_cast<int>(blocks.size()); }
    int rank() const { return n - n_blocks(); }

    auto operator<=>(const DowlingElement&) const = default;
};

struct DowlingElementHash {
    std::size_t operator()(const DowlingElement& e) const;
};

/// Everything needed to interpret elements: ground-set size, the G-set S with
/// its orbit data, and the subposet filter (which orbits may carry singleton
/// zero fibers). allowed_singleton all-true gives the full poset D_n(G,S);
/// with S = {pt} and allowed_singleton = {false} it gives DD_n(G).
struct DowlingContext {
    int n = 0;
    GSetAction action;
    OrbitData orbits;
    std::vector<char> allowed_singleton;

    const FiniteGroup& group() const { return action.group; }
    int n_points() const { return action.n_points(); }
    bool filtered() const;
};

DowlingContext make_context(int n, GSetAction action);
/// allowed_orbits lists the orbit indices that may carry singleton zero fibers.
DowlingContext make_context(int n, GSetAction action, const std::vector<int>& allowed_orbits);

DowlingElement bottom_element(int n);

/// Builds the canonical form from arbitrary coloring representatives.
/// raw_blocks: (members, colors) pairs, any order, any representative.
/// zero_coloring: (member, point) pairs. Overlaps, repeats and out-of-range
/// indices are malformed-element errors. Two raw inputs are equivalent iff
/// their canonical forms compare equal.
DowlingElement canonicalize(const DowlingContext& ctx,
                            const std::vector<std::pair<std::vector<int>, std::vector<int>>>&
                                raw_blocks,
                            const std::vector<std::pair<int, int>>& zero_coloring);

/// Re-sorts and re-normalizes an assembled element in place. No validation.
void renormalize(const FiniteGroup& g, DowlingElement& e);

/// Subposet membership test: no forbidden orbit carries exactly one zero point.
bool admissible(const DowlingContext& ctx, const DowlingElement& e);

/// All elements covering e in the unfiltered poset: every two-block merge (one
/// per unordered block pair and group element) and every block coloring (one
/// per block and point of S), canonicalized, deduplicated and sorted.
std::vector<DowlingElement> covers_up(const DowlingContext& ctx, const DowlingElement& e);

/// Order test, mismatched ground sizes are an argument error.
bool leq(const DowlingContext& ctx, const DowlingElement& a, const DowlingElement& b);

/// An enumerated poset keeps the elements alongside the abstract RankedPoset;
/// labels are the rendered bracket forms and indices follow the canonical
/// (rank, lexicographic) element order.
struct DowlingPoset {
    RankedPoset poset;
    std::vector<DowlingElement> elements;
    std::unordered_map<DowlingElement, int, DowlingElementHash> index;

    int index_of(const DowlingElement& e) const;
};

/// Breadth-first closure from the bottom under covers_up, discarding
/// inadmissible elements. For filtered contexts the cover set is recomputed as
/// the rank-adjacent leq pairs of the retained elements, since cover chains of
/// the ambient poset may pass through discarded elements. Exceeding the cap is
/// a resource error.
DowlingPoset enumerate_poset(const DowlingContext& ctx,
                             std::size_t cap = kDefaultEnumerationCap);

/// One factor of the lower-interval decomposition [0̂,e] ≅ ∏ Q_B × ∏ D(G_o).
struct IntervalFactor {
    enum class Kind { partition, dowling, dowling_no_singleton_zero };
    Kind kind = Kind::partition;
    int m = 0;                    // ground-set size of the factor
    int orbit = -1;               // orbit index for the Dowling kinds
    std::vector<int> stabilizer;  // stabilizer subgroup (group element indices)

    /// Characteristic polynomial of the factor poset: prod (t-i), i=1..m-1 for
    /// a partition lattice, prod (t-1-|G_o|i), i=0..m-1 for a Dowling lattice.
    /// Not defined for the no-singleton-zero kind (no closed form).
    IntPolynomial char_poly() const;
};

std::vector<IntervalFactor> interval_factors(const DowlingContext& ctx, const DowlingElement& e);

/// The image of b under the upper-interval isomorphism
/// D(G,S)_{>= a} ≅ D_l(G,S), l = #blocks of a, instantiated with the
/// canonical coloring representatives. Requires a <= b (order error).
DowlingElement upper_label(const DowlingContext& ctx, const DowlingElement& a,
                           const DowlingElement& b);

// -- Functorial maps ---------------------------------------------------------

/// Disjoint-union pairing D_n x D_k -> D_{n+k}: shift the right element.
struct PairWith {
    DowlingElement right;
};

/// Ground-set injection {0..n-1} -> {0..m-1}; missed indices become singleton
/// blocks. Carries the coloring group so the relabeled blocks can be
/// renormalized (an injection need not be monotone).
struct GroundInjection {
    int m = 0;
    std::vector<int> image;  // image[i], pairwise distinct
    FiniteGroup group;
};

/// G-equivariant point map S -> T; recolors the zero block. Checked
/// exhaustively at application (morphism error when not equivariant).
struct PointMap {
    GSetAction domain;
    GSetAction codomain;
    std::vector<int> map;
};

/// Group homomorphism G -> H; recolors blocks and renormalizes. Checked
/// exhaustively at application (morphism error when not a homomorphism).
struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<int> map;
};

using DowlingMorphism = std::variant<PairWith, GroundInjection, PointMap, GroupHom>;

DowlingElement apply_functorial(const DowlingElement& e, const DowlingMorphism& morphism);

DowlingElement disjoint_union(const DowlingElement& left, const DowlingElement& right);
DowlingElement apply_injection(const DowlingElement& e, const GroundInjection& inj);
DowlingElement apply_point_map(const DowlingElement& e, const PointMap& mu);
DowlingElement apply_group_hom(const DowlingElement& e, const GroupHom& nu);

// -- Text and JSON forms -----------------------------------------------------

/// Paper-style bracket notation with 1-based ground indices, e.g.
/// "[1_e 2_g | 3_e || 4_z1]"; empty sides render as "∅".
std::string render(const GSetAction& action, const DowlingElement& e);
std::string render(const DowlingContext& ctx, const DowlingElement& e);

/// Parses the bracket notation back (accepts arbitrary representatives and
/// returns the canonical form).
DowlingElement parse_element(const DowlingContext& ctx, const std::string& text);

nlohmann::json element_to_json(const DowlingContext& ctx, const DowlingElement& e);
DowlingElement element_from_json(const DowlingContext& ctx, const nlohmann::json& j);

}  // namespace dowlingkit
