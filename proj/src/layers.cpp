#include "dowlingkit/layers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dowlingkit {

FiniteGSpace make_space(std::vector<std::string> points, FiniteGroup group,
                        std::vector<std::vector<int>> act) {
    GSetAction checked = make_action(std::move(group), std::move(points), std::move(act));
    FiniteGSpace space;
    space.points = std::move(checked.points);
    space.group = std::move(checked.group);
    space.act = std::move(checked.act);
    for (int p = 0; p < space.n_points(); ++p) {
        for (int g = 0; g < space.group.order(); ++g) {
            if (g == space.group.identity) continue;
            if (space.apply(g, p) == p) {
                space.singular.push_back(p);
                break;
            }
        }
    }
    return space;
}

GSetAction singular_action(const FiniteGSpace& space) {
    std::vector<int> pos(space.n_points(), -1);
    for (std::size_t i = 0; i < space.singular.size(); ++i)
        pos[space.singular[i]] = static_cast<int>(i);
    std::vector<std::string> points;
    points.reserve(space.singular.size());
    for (int p : space.singular) points.push_back(space.points[p]);
    std::vector<std::vector<int>> act(space.group.order(),
                                      std::vector<int>(space.singular.size()));
    for (int g = 0; g < space.group.order(); ++g)
        for (std::size_t i = 0; i < space.singular.size(); ++i) {
            int img = pos[space.apply(g, space.singular[i])];
            if (img < 0) throw error("singular_action: singular set is not invariant");
            act[g][i] = img;
        }
    return make_action(space.group, std::move(points), std::move(act));
}

FiniteGSpace space_from_json(const nlohmann::json& j) {
    FiniteGroup g = group_from_json(j.at("group"));
    std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
    std::vector<std::vector<int>> act = j.at("act").get<std::vector<std::vector<int>>>();
    return make_space(std::move(points), std::move(g), std::move(act));
}

nlohmann::json space_to_json(const FiniteGSpace& space) {
    return nlohmann::json{{"points", space.points},
                          {"group", group_to_json(space.group)},
                          {"act", space.act},
                          {"singular", space.singular}};
}

LayerEquations defining_equations(const FiniteGroup& g, const DowlingElement& e) {
    LayerEquations eq;
    for (const auto& blk : e.blocks) {
        for (std::size_t a = 0; a < blk.members.size(); ++a) {
            for (std::size_t b = 0; b < blk.members.size(); ++b) {
                if (a == b) continue;
                // the unique ratio with ratio * b(i) = b(j)
                int ratio = g.mul(blk.colors[b], g.inv(blk.colors[a]));
                eq.diagonal_eqs.push_back({blk.members[a], blk.members[b], ratio});
            }
        }
    }
    for (std::size_t k = 0; k < e.zero_members.size(); ++k)
        eq.point_eqs.push_back({e.zero_members[k], e.zero_colors[k]});
    return eq;
}

std::vector<std::vector<int>> layer_points(const FiniteGSpace& space, int n,
                                           const DowlingElement& e,
                                           const std::vector<int>& s_to_point, std::size_t cap) {
    if (e.n != n) throw error("layer_points: element ground size mismatch");
    const int q = space.n_points();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (q > 0 && total > cap / static_cast<std::size_t>(q))
            throw resource_error("layer_points: tuple space exceeds the enumeration cap", cap);
        total *= static_cast<std::size_t>(q);
    }
    if (q == 0) return {};

    LayerEquations eq = defining_equations(space.group, e);
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& d : eq.diagonal_eqs) {
            if (space.apply(d.g, tuple[d.i]) != tuple[d.j]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& p : eq.point_eqs) {
                if (tuple[p.i] != s_to_point[p.s]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(tuple);
        int pos = n - 1;
        while (pos >= 0 && tuple[pos] == q - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return out;
}

std::vector<std::vector<int>> layer_points(const FiniteGSpace& space, int n,
                                           const DowlingElement& e, std::size_t cap) {
    return layer_points(space, n, e, space.singular, cap);
}

BigInt orbit_config_count(const FiniteGSpace& space, int n, const std::vector<int>& removed) {
    if (n < 1) throw error("orbit_config_count: n must be positive");
    std::vector<char> is_removed(space.n_points(), 0);
    for (int p : removed) {
        if (p < 0 || p >= space.n_points())
            throw error("orbit_config_count: removed point out of range");
        is_removed[p] = 1;
    }
    for (int p = 0; p < space.n_points(); ++p)
        for (int g = 0; g < space.group.order(); ++g)
            if (is_removed[p] != is_removed[space.apply(g, p)])
                throw error("orbit_config_count: removed set is not G-invariant");

    // orbit ids for the disjointness test
    std::vector<int> orbit_of(space.n_points(), -1);
    int n_orbits = 0;
    for (int p = 0; p < space.n_points(); ++p) {
        if (orbit_of[p] >= 0) continue;
        for (int g = 0; g < space.group.order(); ++g) orbit_of[space.apply(g, p)] = n_orbits;
        ++n_orbits;
    }

    std::vector<int> allowed;
    for (int p = 0; p < space.n_points(); ++p)
        if (!is_removed[p]) allowed.push_back(p);

    BigInt count = 0;
    std::vector<char> used_orbit(n_orbits, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++count;
            return;
        }
        for (int p : allowed) {
            if (used_orbit[orbit_of[p]]) continue;
            used_orbit[orbit_of[p]] = 1;
            self(self, depth + 1);
            used_orbit[orbit_of[p]] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

DowlingElement max_layer_at(const FiniteGSpace& space, const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<int> singular_pos(space.n_points(), -1);
    for (std::size_t i = 0; i < space.singular.size(); ++i)
        singular_pos[space.singular[i]] = static_cast<int>(i);

    DowlingElement e;
    e.n = n;
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
        if (p[i] < 0 || p[i] >= space.n_points())
            throw error("max_layer_at: coordinate out of range");
        if (done[i]) continue;
        if (singular_pos[p[i]] >= 0) {
            e.zero_members.push_back(i);
            e.zero_colors.push_back(singular_pos[p[i]]);
            done[i] = 1;
            continue;
        }
        // a block: all later coordinates in the same (free) orbit; the
        // transporter is unique because the base point is nonsingular
        DowlingBlock blk;
        blk.members.push_back(i);
        blk.colors.push_back(space.group.identity);
        done[i] = 1;
        for (int j = i + 1; j < n; ++j) {
            if (done[j] || singular_pos[p[j]] >= 0) continue;
            for (int g = 0; g < space.group.order(); ++g) {
                if (space.apply(g, p[i]) == p[j]) {
                    blk.members.push_back(j);
                    blk.colors.push_back(g);
                    done[j] = 1;
                    break;
                }
            }
        }
        e.blocks.push_back(std::move(blk));
    }
    renormalize(space.group, e);
    return e;
}

IncidenceReport verify_incidence(const FiniteGSpace& space, int n, std::size_t cap) {
    IncidenceReport report;
    DowlingContext ctx = make_context(n, singular_action(space));
    DowlingPoset dp = enumerate_poset(ctx, cap);
    report.n_elements = static_cast<int>(dp.elements.size());

    std::vector<std::vector<std::vector<int>>> pts(dp.elements.size());
    for (std::size_t i = 0; i < dp.elements.size(); ++i)
        pts[i] = layer_points(space, n, dp.elements[i]);

    auto contains = [](const std::vector<std::vector<int>>& big,
                       const std::vector<std::vector<int>>& small) {
        // tuples come out in odometer order, so a merge scan suffices
        std::size_t i = 0;
        for (const auto& t : small) {
            while (i < big.size() && big[i] < t) ++i;
            if (i == big.size() || big[i] != t) return false;
        }
        return true;
    };

    std::ostringstream detail;
    bool ok = true;
    for (std::size_t a = 0; a < dp.elements.size(); ++a) {
        for (std::size_t b = 0; b < dp.elements.size(); ++b) {
            if (a == b) continue;
            if (pts[a] == pts[b]) {
                ++report.n_collisions;
                continue;
            }
            bool order = leq(ctx, dp.elements[a], dp.elements[b]);
            bool incidence = contains(pts[a], pts[b]);
            if (order != incidence) {
                ok = false;
                detail << "mismatch: " << dp.poset.label(static_cast<int>(a)) << " vs "
                       << dp.poset.label(static_cast<int>(b)) << "\n";
            }
        }
    }
    report.n_collisions /= 2;  // counted both ways
    report.inconclusive = report.n_collisions > 0;
    report.confirmed = ok && !report.inconclusive;
    if (report.inconclusive)
        detail << report.n_collisions << " point-set collision(s); order check inconclusive\n";
    report.detail = detail.str();
    return report;
}

}  // namespace dowlingkit
