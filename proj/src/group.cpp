#include "dowlingkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

namespace dowlingkit {

namespace {

// identifiers appear inside the bracket notation, so the characters that
// structure it are reserved
void check_identifier(const std::string& s, const char* what) {
    if (s.empty()) throw error(std::string(what) + " identifier must be nonempty");
    for (char c : s)
        if (c == '|' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)))
            throw error(std::string(what) + " identifier '" + s +
                        "' contains a reserved character");
}

}  // namespace

FiniteGroup make_group(std::string name, std::vector<std::string> elements,
                       std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw error("group must have at least one element");
    for (const auto& e : elements) check_identifier(e, "group element");
    if (std::set<std::string>(elements.begin(), elements.end()).size() != elements.size())
        throw error("group element identifiers must be unique");
    if (static_cast<int>(table.size()) != n)
        throw error("group table has wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw error("group table has a ragged row");
        for (int v : row)
            if (v < 0 || v >= n) throw error("group table entry out of range");
    }

    // identity: the unique e with e*x = x*e = x for all x
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw error("group table has no identity");

    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == identity && table[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0) throw error("group element '" + elements[a] + "' has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw error("group table is not associative");

    FiniteGroup g;
    g.name = std::move(name);
    g.elements = std::move(elements);
    g.table = std::move(table);
    g.identity = identity;
    g.inverse = std::move(inverse);
    return g;
}

FiniteGroup cyclic_group(int d) {
    if (d <= 0) throw error("cyclic_group: order must be positive");
    std::vector<std::string> elements;
    elements.reserve(d);
    for (int i = 0; i < d; ++i) {
        if (i == 0)
            elements.push_back("e");
        else if (i == 1)
            elements.push_back("g");
        else
            elements.push_back("g^" + std::to_string(i));
    }
    std::vector<std::vector<int>> table(d, std::vector<int>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) table[a][b] = (a + b) % d;
    return make_group("Z" + std::to_string(d), std::move(elements), std::move(table));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> members;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    add(g.identity);
    for (int s : seed) {
        if (s < 0 || s >= g.order()) throw error("subgroup_closure: element out of range");
        add(s);
    }
    // index loops: members grows while we scan it
    for (std::size_t i = 0; i < members.size(); ++i) {
        add(g.inv(members[i]));
        for (std::size_t j = 0; j < members.size(); ++j) {
            add(g.mul(members[i], members[j]));
            add(g.mul(members[j], members[i]));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> minimal_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closed = subgroup_closure(g, {});
    for (int x = 0; x < g.order(); ++x) {
        if (!std::binary_search(closed.begin(), closed.end(), x)) {
            gens.push_back(x);
            closed = subgroup_closure(g, gens);
            if (static_cast<int>(closed.size()) == g.order()) break;
        }
    }
    return gens;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& members,
                              std::string name) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
    const int m = static_cast<int>(sorted.size());
    std::vector<std::string> elements(m);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        elements[i] = g.elements[sorted[i]];
        for (int j = 0; j < m; ++j) {
            int p = g.mul(sorted[i], sorted[j]);
            if (pos[p] < 0) throw error("subgroup_as_group: member set is not closed");
            table[i][j] = pos[p];
        }
    }
    if (name.empty()) name = g.name + "-sub" + std::to_string(m);
    return make_group(std::move(name), std::move(elements), std::move(table));
}

bool is_cyclic_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (int x : sorted) {
        if (subgroup_closure(g, {x}) == sorted) return true;
    }
    return false;
}

GSetAction make_action(FiniteGroup group, std::vector<std::string> points,
                       std::vector<std::vector<int>> act) {
    const int n = static_cast<int>(points.size());
    for (const auto& p : points) check_identifier(p, "action point");
    if (std::set<std::string>(points.begin(), points.end()).size() != points.size())
        throw error("action point identifiers must be unique");
    if (static_cast<int>(act.size()) != group.order())
        throw error("action table has wrong number of rows");
    for (const auto& row : act) {
        if (static_cast<int>(row.size()) != n) throw error("action table has a ragged row");
        for (int v : row)
            if (v < 0 || v >= n) throw error("action table entry out of range");
    }
    for (int s = 0; s < n; ++s)
        if (act[group.identity][s] != s) throw error("action: identity must fix every point");
    for (int g = 0; g < group.order(); ++g)
        for (int h = 0; h < group.order(); ++h)
            for (int s = 0; s < n; ++s)
                if (act[g][act[h][s]] != act[group.mul(g, h)][s])
                    throw error("action is not compatible with the group law");

    GSetAction a;
    a.group = std::move(group);
    a.points = std::move(points);
    a.act = std::move(act);
    return a;
}

GSetAction trivial_action(FiniteGroup group, std::vector<std::string> points) {
    std::vector<std::vector<int>> act(group.order(), std::vector<int>(points.size()));
    for (auto& row : act)
        for (std::size_t s = 0; s < points.size(); ++s) row[s] = static_cast<int>(s);
    return make_action(std::move(group), std::move(points), std::move(act));
}

OrbitData orbit_data(const GSetAction& action) {
    const int np = action.n_points();
    const int ng = action.group.order();
    OrbitData od;
    od.orbit_of.assign(np, -1);
    od.transporter.assign(np, -1);

    for (int p = 0; p < np; ++p) {
        if (od.orbit_of[p] >= 0) continue;
        const int o = od.n_orbits();
        std::vector<int> orbit;
        for (int g = 0; g < ng; ++g) {
            int t = action.apply(g, p);
            if (od.orbit_of[t] < 0) {
                od.orbit_of[t] = o;
                orbit.push_back(t);
            }
            // smallest group index transporting the representative wins
            if (od.transporter[t] < 0) od.transporter[t] = g;
        }
        std::sort(orbit.begin(), orbit.end());
        od.orbits.push_back(std::move(orbit));
        od.rep.push_back(p);  // p is the smallest unseen index, hence the orbit minimum

        std::vector<int> stab;
        for (int g = 0; g < ng; ++g)
            if (action.apply(g, p) == p) stab.push_back(g);
        od.stabilizer.push_back(std::move(stab));
    }
    return od;
}

FiniteGroup group_from_json(const nlohmann::json& j, const std::string& name) {
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::string n = j.value("name", name);
    return make_group(n, std::move(elements), std::move(table));
}

GSetAction action_from_json(const nlohmann::json& j) {
    FiniteGroup g = group_from_json(j.at("group"));
    std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
    std::vector<std::vector<int>> act = j.at("act").get<std::vector<std::vector<int>>>();
    return make_action(std::move(g), std::move(points), std::move(act));
}

nlohmann::json group_to_json(const FiniteGroup& g) {
    return nlohmann::json{{"name", g.name}, {"elements", g.elements}, {"table", g.table}};
}

nlohmann::json action_to_json(const GSetAction& a) {
    return nlohmann::json{
        {"group", group_to_json(a.group)}, {"points", a.points}, {"act", a.act}};
}

}  // namespace dowlingkit
