#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dowlingkit/common.hpp"

namespace dowlingkit {

/// A finite group given by an explicit multiplication table. All groups in
/// scope are tiny, so the group axioms are checked by exhaustive loops at
/// construction time.
struct FiniteGroup {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;  // table[a][b] = index of a*b
    int identity = 0;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(elements.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
};

/// Validates the table (associativity, identity, two-sided inverses, unique
/// element identifiers) and fills in the derived fields.
FiniteGroup make_group(std::string name, std::vector<std::string> elements,
                       std::vector<std::vector<int>> table);

/// Cyclic group of order d with elements e, g, g^2, ..., g^{d-1}.
/// d = 0 is an invalid-order error.
FiniteGroup cyclic_group(int d);

/// Reindexes a subgroup (given as a set of element indices, closed under the
/// table) into a standalone FiniteGroup.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& members,
                              std::string name = "");

/// Closure of `seed` under multiplication and inverses.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed);

/// Greedy generating set (first elements, in index order, whose closure is G).
std::vector<int> minimal_generators(const FiniteGroup& g);

/// True iff the subgroup spanned by `members` is generated by one element.
bool is_cyclic_subgroup(const FiniteGroup& g, const std::vector<int>& members);

/// An action of a finite group on a finite point set.
struct GSetAction {
    FiniteGroup group;
    std::vector<std::string> points;
    std::vector<std::vector<int>> act;  // act[g][p]

    int n_points() const { return static_cast<int>(points.size()); }
    int apply(int g, int p) const { return act[g][p]; }
};

/// Checks the action axioms act(e,s) = s and act(g, act(h,s)) = act(gh, s).
GSetAction make_action(FiniteGroup group, std::vector<std::string> points,
                       std::vector<std::vector<int>> act);

GSetAction trivial_action(FiniteGroup group, std::vector<std::string> points);

/// Orbits, representatives, stabilizers and transporters of an action.
/// Representative = smallest point index in the orbit; transporter(t) is the
/// smallest group index g with g.rep = t. Deterministic given input ordering.
struct OrbitData {
    std::vector<std::vector<int>> orbits;      // sorted point indices
    std::vector<int> orbit_of;                 // point -> orbit index
    std::vector<int> rep;                      // orbit -> point
    std::vector<std::vector<int>> stabilizer;  // orbit -> sorted group element indices
    std::vector<int> transporter;              // point -> group element

    int n_orbits() const { return static_cast<int>(orbits.size()); }
};

OrbitData orbit_data(const GSetAction& action);

// JSON spec format consumed by the CLI:
//   {"group": {"elements": [...], "table": [[...]]}, "points": [...], "act": [[...]]}
FiniteGroup group_from_json(const nlohmann::json& j, const std::string& name = "group");
GSetAction action_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);
nlohmann::json action_to_json(const GSetAction& a);

}  // namespace dowlingkit
