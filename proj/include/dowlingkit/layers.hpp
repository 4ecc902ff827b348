#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dowlingkit/dowling.hpp"

namespace dowlingkit {

inline constexpr std::size_t kDefaultTupleCap = 2000000;

/// A finite model of a G-space: a bare finite G-set of rational points, with
/// the singular set S = {x : exists g != e with g.x = x} derived at
/// construction time.
struct FiniteGSpace {
    std::vector<std::string> points;
    FiniteGroup group;
    std::vector<std::vector<int>> act;
    std::vector<int> singular;  // sorted point indices

    int n_points() const { return static_cast<int>(points.size()); }
    int apply(int g, int p) const { return act[g][p]; }
};

FiniteGSpace make_space(std::vector<std::string> points, FiniteGroup group,
                        std::vector<std::vector<int>> act);

/// The action of G restricted to the singular set, in singular-index order.
/// Dowling elements consumed by the layer operations below live over this
/// action: zero colors are positions in space.singular.
GSetAction singular_action(const FiniteGSpace& space);

/// {"points": [...], "group": {"elements": [...], "table": [[...]]}, "act": [[...]]}
FiniteGSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const FiniteGSpace& space);

/// Defining equations of the layer X^e: one diagonal equation g.x_i = x_j per
/// ordered pair in a block (redundant pairs retained, matching the canonical
/// construction), and one pin x_i = s per zero-block point.
struct LayerEquations {
    struct Diagonal {
        int i, j, g;  // g.x_i = x_j
    };
    struct PointPin {
        int i, s;  // x_i = s, s indexes the singular action's points
    };
    std::vector<Diagonal> diagonal_eqs;
    std::vector<PointPin> point_eqs;
};

LayerEquations defining_equations(const FiniteGroup& g, const DowlingElement& e);

/// All tuples in points^n satisfying every equation of e. The pins are
/// interpreted through s_to_point (position -> space point index); the
/// overload without it uses space.singular. |points|^n past the cap is a
/// resource error.
std::vector<std::vector<int>> layer_points(const FiniteGSpace& space, int n,
                                           const DowlingElement& e,
                                           const std::vector<int>& s_to_point,
                                           std::size_t cap = kDefaultTupleCap);
std::vector<std::vector<int>> layer_points(const FiniteGSpace& space, int n,
                                           const DowlingElement& e,
                                           std::size_t cap = kDefaultTupleCap);

/// Brute-force count of n-tuples with pairwise disjoint G-orbits and all
/// coordinates outside `removed` (which must be G-invariant).
BigInt orbit_config_count(const FiniteGSpace& space, int n, const std::vector<int>& removed);

/// The maximum of {e : p in X^e}: blocks from the same-orbit relation on
/// nonsingular coordinates, singular coordinates pinned in the zero block.
DowlingElement max_layer_at(const FiniteGSpace& space, const std::vector<int>& p);

/// Containment-order check of the layer realization: enumerates D_n(G,S) over
/// the singular action and confirms leq(a,b) <=> points(b) ⊆ points(a).
/// Distinct elements with identical point sets make the check inconclusive
/// rather than failed (small fields can collapse distinct layers).
struct IncidenceReport {
    bool confirmed = false;
    bool inconclusive = false;
    int n_elements = 0;
    int n_collisions = 0;
    std::string detail;
};

IncidenceReport verify_incidence(const FiniteGSpace& space, int n,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace dowlingkit
