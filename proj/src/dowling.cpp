#include "dowlingkit/dowling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dowlingkit {

namespace {

constexpr const char* kEmptySide = "∅";

std::size_t hash_mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::size_t DowlingElementHash::operator()(const DowlingElement& e) const {
    std::size_t h = std::hash<int>()(e.n);
    for (const auto& b : e.blocks) {
        h = hash_mix(h, 0xb10c);
        for (std::size_t i = 0; i < b.members.size(); ++i) {
            h = hash_mix(h, static_cast<std::size_t>(b.members[i]));
            h = hash_mix(h, static_cast<std::size_t>(b.colors[i]) * 0x51);
        }
    }
    h = hash_mix(h, 0x2e40);
    for (std::size_t i = 0; i < e.zero_members.size(); ++i) {
        h = hash_mix(h, static_cast<std::size_t>(e.zero_members[i]));
        h = hash_mix(h, static_cast<std::size_t>(e.zero_colors[i]) * 0x51);
    }
    return h;
}

bool DowlingContext::filtered() const {
    return std::find(allowed_singleton.begin(), allowed_singleton.end(), 0) !=
           allowed_singleton.end();
}

DowlingContext make_context(int n, GSetAction action) {
    if (n < 0) throw error("context: ground-set size must be nonnegative");
    DowlingContext ctx;
    ctx.n = n;
    ctx.orbits = orbit_data(action);
    ctx.action = std::move(action);
    ctx.allowed_singleton.assign(ctx.orbits.n_orbits(), 1);
    return ctx;
}

DowlingContext make_context(int n, GSetAction action, const std::vector<int>& allowed_orbits) {
    DowlingContext ctx = make_context(n, std::move(action));
    std::fill(ctx.allowed_singleton.begin(), ctx.allowed_singleton.end(), 0);
    for (int o : allowed_orbits) {
        if (o < 0 || o >= ctx.orbits.n_orbits())
            throw error("context: allowed orbit index out of range");
        ctx.allowed_singleton[o] = 1;
    }
    return ctx;
}

DowlingElement bottom_element(int n) {
    DowlingElement e;
    e.n = n;
    e.blocks.reserve(n);
    for (int i = 0; i < n; ++i) e.blocks.push_back({{i}, {0}});
    return e;
}

void renormalize(const FiniteGroup& g, DowlingElement& e) {
    for (auto& blk : e.blocks) {
        std::vector<std::pair<int, int>> paired(blk.members.size());
        for (std::size_t i = 0; i < blk.members.size(); ++i)
            paired[i] = {blk.members[i], blk.colors[i]};
        std::sort(paired.begin(), paired.end());
        const int shift = g.inv(paired.front().second);
        for (std::size_t i = 0; i < paired.size(); ++i) {
            blk.members[i] = paired[i].first;
            blk.colors[i] = g.mul(paired[i].second, shift);
        }
    }
    std::sort(e.blocks.begin(), e.blocks.end(), [](const DowlingBlock& a, const DowlingBlock& b) {
        return a.members.front() < b.members.front();
    });
    std::vector<std::pair<int, int>> zero(e.zero_members.size());
    for (std::size_t i = 0; i < zero.size(); ++i) zero[i] = {e.zero_members[i], e.zero_colors[i]};
    std::sort(zero.begin(), zero.end());
    for (std::size_t i = 0; i < zero.size(); ++i) {
        e.zero_members[i] = zero[i].first;
        e.zero_colors[i] = zero[i].second;
    }
}

DowlingElement canonicalize(
    const DowlingContext& ctx,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& raw_blocks,
    const std::vector<std::pair<int, int>>& zero_coloring) {
    DowlingElement e;
    e.n = ctx.n;
    std::vector<char> seen(ctx.n, 0);
    auto claim = [&](int i) {
        if (i < 0 || i >= ctx.n) throw error("malformed element: ground index out of range");
        if (seen[i]) throw error("malformed element: overlapping blocks");
        seen[i] = 1;
    };
    for (const auto& [members, colors] : raw_blocks) {
        if (members.empty()) throw error("malformed element: empty block");
        if (members.size() != colors.size())
            throw error("malformed element: block coloring is not total");
        for (int m : members) claim(m);
        for (int c : colors)
            if (c < 0 || c >= ctx.group().order())
                throw error("malformed element: group color out of range");
        e.blocks.push_back({members, colors});
    }
    for (auto [m, s] : zero_coloring) {
        claim(m);
        if (s < 0 || s >= ctx.n_points())
            throw error("malformed element: zero color out of range");
        e.zero_members.push_back(m);
        e.zero_colors.push_back(s);
    }
    renormalize(ctx.group(), e);
    return e;
}

bool admissible(const DowlingContext& ctx, const DowlingElement& e) {
    if (!ctx.filtered()) return true;
    std::vector<int> fiber(ctx.orbits.n_orbits(), 0);
    for (int s : e.zero_colors) ++fiber[ctx.orbits.orbit_of[s]];
    for (int o = 0; o < ctx.orbits.n_orbits(); ++o)
        if (fiber[o] == 1 && !ctx.allowed_singleton[o]) return false;
    return true;
}

std::vector<DowlingElement> covers_up(const DowlingContext& ctx, const DowlingElement& e) {
    const FiniteGroup& g = ctx.group();
    std::vector<DowlingElement> out;
    const int nb = e.n_blocks();

    // merge: one cover per unordered block pair and group ratio
    for (int i = 0; i < nb; ++i) {
        for (int j = i + 1; j < nb; ++j) {
            for (int ratio = 0; ratio < g.order(); ++ratio) {
                DowlingElement c = e;
                DowlingBlock merged = c.blocks[i];
                const DowlingBlock& other = c.blocks[j];
                merged.members.insert(merged.members.end(), other.members.begin(),
                                      other.members.end());
                for (int col : other.colors) merged.colors.push_back(g.mul(col, ratio));
                c.blocks.erase(c.blocks.begin() + j);
                c.blocks[i] = std::move(merged);
                renormalize(g, c);
                out.push_back(std::move(c));
            }
        }
    }

    // color: throw one block into the zero block via z'(i) = b(i).s
    for (int i = 0; i < nb; ++i) {
        for (int s = 0; s < ctx.n_points(); ++s) {
            DowlingElement c = e;
            const DowlingBlock& blk = c.blocks[i];
            for (std::size_t k = 0; k < blk.members.size(); ++k) {
                c.zero_members.push_back(blk.members[k]);
                c.zero_colors.push_back(ctx.action.apply(blk.colors[k], s));
            }
            c.blocks.erase(c.blocks.begin() + i);
            renormalize(g, c);
            out.push_back(std::move(c));
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool leq(const DowlingContext& ctx, const DowlingElement& a, const DowlingElement& b) {
    if (a.n != b.n) throw error("leq: elements have different ground-set sizes");
    const FiniteGroup& g = ctx.group();

    // where each ground index sits in b: block index, or -1 for the zero block
    std::vector<int> b_owner(b.n, -2);
    std::vector<int> b_color(b.n, -1);
    for (int j = 0; j < b.n_blocks(); ++j) {
        const auto& blk = b.blocks[j];
        for (std::size_t k = 0; k < blk.members.size(); ++k) {
            b_owner[blk.members[k]] = j;
            b_color[blk.members[k]] = blk.colors[k];
        }
    }
    for (std::size_t k = 0; k < b.zero_members.size(); ++k) {
        b_owner[b.zero_members[k]] = -1;
        b_color[b.zero_members[k]] = b.zero_colors[k];
    }

    // zero coloring of a must be the restriction of b's
    for (std::size_t k = 0; k < a.zero_members.size(); ++k) {
        int m = a.zero_members[k];
        if (b_owner[m] != -1 || b_color[m] != a.zero_colors[k]) return false;
    }

    for (const auto& blk : a.blocks) {
        const int home = b_owner[blk.members.front()];
        if (home >= 0) {
            // contained in a block of b with one group ratio; blk.colors[0] is
            // the identity, so the ratio is forced by the minimum member
            const int ratio = b_color[blk.members.front()];
            for (std::size_t k = 0; k < blk.members.size(); ++k) {
                int m = blk.members[k];
                if (b_owner[m] != home) return false;
                if (b_color[m] != g.mul(blk.colors[k], ratio)) return false;
            }
        } else {
            // thrown into the zero block via a single equivariant coloring;
            // the point is forced by the minimum member
            const int s = b_color[blk.members.front()];
            for (std::size_t k = 0; k < blk.members.size(); ++k) {
                int m = blk.members[k];
                if (b_owner[m] != -1) return false;
                if (b_color[m] != ctx.action.apply(blk.colors[k], s)) return false;
            }
        }
    }
    return true;
}

int DowlingPoset::index_of(const DowlingElement& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
}

DowlingPoset enumerate_poset(const DowlingContext& ctx, std::size_t cap) {
    DowlingPoset dp;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::vector<int>> ids_by_rank;

    std::vector<DowlingElement> frontier = {bottom_element(ctx.n)};
    const bool recompute_covers = ctx.filtered();

    while (!frontier.empty()) {
        if (frontier.size() > cap)
            throw resource_error("enumerate_poset: rank frontier exceeds the size cap", cap);
        std::sort(frontier.begin(), frontier.end());
        std::vector<int> ids;
        ids.reserve(frontier.size());
        for (auto& e : frontier) {
            if (dp.elements.size() >= cap)
                throw resource_error("enumerate_poset: poset exceeds the size cap", cap);
            int id = static_cast<int>(dp.elements.size());
            dp.index.emplace(e, id);
            dp.elements.push_back(std::move(e));
            ids.push_back(id);
        }
        ids_by_rank.push_back(ids);

        std::vector<DowlingElement> next;
        std::unordered_map<DowlingElement, std::vector<int>, DowlingElementHash> parents;
        for (int id : ids) {
            for (auto& c : covers_up(ctx, dp.elements[id])) {
                if (!admissible(ctx, c)) continue;
                auto [it, fresh] = parents.try_emplace(c);
                it->second.push_back(id);
                if (fresh) next.push_back(std::move(c));
            }
        }
        if (!recompute_covers) {
            // child indices are assigned next pass; remember parent lists keyed
            // by the element and resolve afterwards
            std::sort(next.begin(), next.end());
            int child_id = static_cast<int>(dp.elements.size());
            for (const auto& c : next) {
                for (int p : parents[c]) covers.emplace_back(p, child_id);
                ++child_id;
            }
        }
        frontier = std::move(next);
    }

    if (recompute_covers) {
        // a covering chain of the ambient poset may pass through discarded
        // elements, so covers are the rank-adjacent comparabilities here
        for (std::size_t r = 1; r < ids_by_rank.size(); ++r) {
            for (int hi : ids_by_rank[r])
                for (int lo : ids_by_rank[r - 1])
                    if (leq(ctx, dp.elements[lo], dp.elements[hi])) covers.emplace_back(lo, hi);
        }
        std::sort(covers.begin(), covers.end());
    }

    std::vector<int> ranks(dp.elements.size());
    std::vector<std::string> labels(dp.elements.size());
    for (std::size_t i = 0; i < dp.elements.size(); ++i) {
        ranks[i] = dp.elements[i].rank();
        labels[i] = render(ctx, dp.elements[i]);
    }
    dp.poset = RankedPoset(static_cast<int>(dp.elements.size()), std::move(covers),
                           std::move(ranks), std::move(labels));
    return dp;
}

IntPolynomial IntervalFactor::char_poly() const {
    IntPolynomial t = IntPolynomial::variable("t");
    IntPolynomial out(BigInt(1), "t");
    switch (kind) {
        case Kind::partition:
            for (int i = 1; i < m; ++i) out *= t - IntPolynomial(BigInt(i), "t");
            return out;
        case Kind::dowling: {
            const int order = static_cast<int>(stabilizer.size());
            for (int i = 0; i < m; ++i)
                out *= t - IntPolynomial(BigInt(1 + order * i), "t");
            return out;
        }
        case Kind::dowling_no_singleton_zero:
            throw error("IntervalFactor: no closed characteristic polynomial for DD factors");
    }
    throw error("IntervalFactor: unknown kind");
}

std::vector<IntervalFactor> interval_factors(const DowlingContext& ctx, const DowlingElement& e) {
    std::vector<IntervalFactor> out;
    for (const auto& blk : e.blocks) {
        IntervalFactor f;
        f.kind = IntervalFactor::Kind::partition;
        f.m = static_cast<int>(blk.members.size());
        out.push_back(std::move(f));
    }
    std::vector<int> fiber(ctx.orbits.n_orbits(), 0);
    for (int s : e.zero_colors) ++fiber[ctx.orbits.orbit_of[s]];
    for (int o = 0; o < ctx.orbits.n_orbits(); ++o) {
        if (fiber[o] == 0) continue;
        IntervalFactor f;
        f.kind = ctx.allowed_singleton[o] ? IntervalFactor::Kind::dowling
                                          : IntervalFactor::Kind::dowling_no_singleton_zero;
        f.m = fiber[o];
        f.orbit = o;
        f.stabilizer = ctx.orbits.stabilizer[o];
        out.push_back(std::move(f));
    }
    return out;
}

DowlingElement upper_label(const DowlingContext& ctx, const DowlingElement& a,
                           const DowlingElement& b) {
    if (!leq(ctx, a, b)) throw error("upper_label: first element is not below the second");
    const int ell = a.n_blocks();

    std::vector<int> owner(a.n, -1);
    for (int i = 0; i < ell; ++i)
        for (int m : a.blocks[i].members) owner[m] = i;

    DowlingElement out;
    out.n = ell;
    for (const auto& blk : b.blocks) {
        std::map<int, int> ratios;  // a-block index -> ratio at its minimum member
        for (std::size_t k = 0; k < blk.members.size(); ++k) {
            int i = owner[blk.members[k]];
            if (blk.members[k] == a.blocks[i].members.front()) ratios[i] = blk.colors[k];
        }
        DowlingBlock nb;
        for (auto [i, ratio] : ratios) {
            nb.members.push_back(i);
            nb.colors.push_back(ratio);
        }
        out.blocks.push_back(std::move(nb));
    }
    // a-blocks swallowed by b's zero block become colored points; the
    // equivariant coloring is pinned by its value at the block minimum
    std::vector<char> in_b_zero(a.n, 0);
    std::vector<int> b_zero_color(a.n, -1);
    for (std::size_t k = 0; k < b.zero_members.size(); ++k) {
        in_b_zero[b.zero_members[k]] = 1;
        b_zero_color[b.zero_members[k]] = b.zero_colors[k];
    }
    for (int i = 0; i < ell; ++i) {
        int m0 = a.blocks[i].members.front();
        if (in_b_zero[m0]) {
            out.zero_members.push_back(i);
            out.zero_colors.push_back(b_zero_color[m0]);
        }
    }
    renormalize(ctx.group(), out);
    return out;
}

DowlingElement disjoint_union(const DowlingElement& left, const DowlingElement& right) {
    DowlingElement out = left;
    out.n = left.n + right.n;
    for (const auto& blk : right.blocks) {
        DowlingBlock nb = blk;
        for (int& m : nb.members) m += left.n;
        out.blocks.push_back(std::move(nb));
    }
    for (std::size_t k = 0; k < right.zero_members.size(); ++k) {
        out.zero_members.push_back(right.zero_members[k] + left.n);
        out.zero_colors.push_back(right.zero_colors[k]);
    }
    // left part stays canonical and the shifted right part keeps its internal
    // order; only the block order needs fixing
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const DowlingBlock& x, const DowlingBlock& y) {
                  return x.members.front() < y.members.front();
              });
    return out;
}

DowlingElement apply_injection(const DowlingElement& e, const GroundInjection& inj) {
    if (static_cast<int>(inj.image.size()) != e.n)
        throw error("injection: image size must match the ground-set size");
    std::vector<char> hit(inj.m, 0);
    for (int v : inj.image) {
        if (v < 0 || v >= inj.m) throw error("injection: image index out of range");
        if (hit[v]) throw error("injection: map is not injective");
        hit[v] = 1;
    }
    DowlingElement out;
    out.n = inj.m;
    for (const auto& blk : e.blocks) {
        DowlingBlock nb = blk;
        for (int& m : nb.members) m = inj.image[m];
        out.blocks.push_back(std::move(nb));
    }
    for (int j = 0; j < inj.m; ++j)
        if (!hit[j]) out.blocks.push_back({{j}, {0}});
    for (std::size_t k = 0; k < e.zero_members.size(); ++k) {
        out.zero_members.push_back(inj.image[e.zero_members[k]]);
        out.zero_colors.push_back(e.zero_colors[k]);
    }
    renormalize(inj.group, out);
    return out;
}

DowlingElement apply_point_map(const DowlingElement& e, const PointMap& mu) {
    if (mu.domain.group.table != mu.codomain.group.table)
        throw error("point map: domain and codomain must carry the same group");
    if (static_cast<int>(mu.map.size()) != mu.domain.n_points())
        throw error("point map: map size must match the domain");
    for (int v : mu.map)
        if (v < 0 || v >= mu.codomain.n_points())
            throw error("point map: image point out of range");
    for (int g = 0; g < mu.domain.group.order(); ++g)
        for (int s = 0; s < mu.domain.n_points(); ++s)
            if (mu.map[mu.domain.apply(g, s)] != mu.codomain.apply(g, mu.map[s]))
                throw error("point map: not G-equivariant");
    DowlingElement out = e;
    for (int& s : out.zero_colors) s = mu.map[s];
    return out;
}

DowlingElement apply_group_hom(const DowlingElement& e, const GroupHom& nu) {
    if (static_cast<int>(nu.map.size()) != nu.domain.order())
        throw error("group hom: map size must match the domain order");
    for (int v : nu.map)
        if (v < 0 || v >= nu.codomain.order()) throw error("group hom: image out of range");
    for (int a = 0; a < nu.domain.order(); ++a)
        for (int b = 0; b < nu.domain.order(); ++b)
            if (nu.map[nu.domain.mul(a, b)] != nu.codomain.mul(nu.map[a], nu.map[b]))
                throw error("group hom: not a homomorphism");
    DowlingElement out = e;
    for (auto& blk : out.blocks)
        for (int& c : blk.colors) c = nu.map[c];
    renormalize(nu.codomain, out);
    return out;
}

DowlingElement apply_functorial(const DowlingElement& e, const DowlingMorphism& morphism) {
    return std::visit(
        [&](const auto& m) -> DowlingElement {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PairWith>)
                return disjoint_union(e, m.right);
            else if constexpr (std::is_same_v<T, GroundInjection>)
                return apply_injection(e, m);
            else if constexpr (std::is_same_v<T, PointMap>)
                return apply_point_map(e, m);
            else
                return apply_group_hom(e, m);
        },
        morphism);
}

std::string render(const GSetAction& action, const DowlingElement& e) {
    std::ostringstream os;
    os << "[";
    if (e.blocks.empty()) {
        os << kEmptySide;
    } else {
        for (std::size_t b = 0; b < e.blocks.size(); ++b) {
            if (b) os << " | ";
            const auto& blk = e.blocks[b];
            for (std::size_t k = 0; k < blk.members.size(); ++k) {
                if (k) os << " ";
                os << blk.members[k] + 1 << "_" << action.group.elements[blk.colors[k]];
            }
        }
    }
    os << " || ";
    if (e.zero_members.empty()) {
        os << kEmptySide;
    } else {
        for (std::size_t k = 0; k < e.zero_members.size(); ++k) {
            if (k) os << " ";
            os << e.zero_members[k] + 1 << "_" << action.points[e.zero_colors[k]];
        }
    }
    os << "]";
    return os.str();
}

std::string render(const DowlingContext& ctx, const DowlingElement& e) {
    return render(ctx.action, e);
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::pair<int, std::string> parse_entry(const std::string& tok) {
    auto pos = tok.find('_');
    if (pos == std::string::npos || pos == 0)
        throw error("parse: malformed entry '" + tok + "'");
    int idx;
    try {
        idx = std::stoi(tok.substr(0, pos));
    } catch (const std::exception&) {
        throw error("parse: malformed index in '" + tok + "'");
    }
    return {idx, tok.substr(pos + 1)};
}

bool side_is_empty(const std::string& side) {
    auto toks = split_tokens(side);
    return toks.empty() || (toks.size() == 1 && toks[0] == kEmptySide);
}

}  // namespace

DowlingElement parse_element(const DowlingContext& ctx, const std::string& text) {
    std::string s = text;
    auto lb = s.find('[');
    auto rb = s.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw error("parse: element must be bracketed");
    s = s.substr(lb + 1, rb - lb - 1);
    auto sep = s.find("||");
    if (sep == std::string::npos) throw error("parse: element must contain '||'");
    std::string block_side = s.substr(0, sep);
    std::string zero_side = s.substr(sep + 2);

    std::unordered_map<std::string, int> group_index, point_index;
    for (int i = 0; i < ctx.group().order(); ++i) group_index[ctx.group().elements[i]] = i;
    for (int i = 0; i < ctx.n_points(); ++i) point_index[ctx.action.points[i]] = i;

    std::vector<std::pair<std::vector<int>, std::vector<int>>> raw_blocks;
    if (!side_is_empty(block_side)) {
        std::size_t start = 0;
        while (start <= block_side.size()) {
            auto bar = block_side.find('|', start);
            std::string one =
                block_side.substr(start, bar == std::string::npos ? bar : bar - start);
            auto toks = split_tokens(one);
            if (!toks.empty()) {
                std::vector<int> members, colors;
                for (const auto& tok : toks) {
                    auto [idx, name] = parse_entry(tok);
                    auto it = group_index.find(name);
                    if (it == group_index.end())
                        throw error("parse: unknown group element '" + name + "'");
                    members.push_back(idx - 1);
                    colors.push_back(it->second);
                }
                raw_blocks.emplace_back(std::move(members), std::move(colors));
            }
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
    }
    std::vector<std::pair<int, int>> zero;
    if (!side_is_empty(zero_side)) {
        for (const auto& tok : split_tokens(zero_side)) {
            auto [idx, name] = parse_entry(tok);
            auto it = point_index.find(name);
            if (it == point_index.end()) throw error("parse: unknown point '" + name + "'");
            zero.emplace_back(idx - 1, it->second);
        }
    }
    // indices absent from both sides become singleton blocks: the bracket
    // notation leaves singletons implicit only in the paper's atom shorthand,
    // not here, so require totality instead
    std::vector<char> seen(ctx.n, 0);
    for (const auto& [ms, cs] : raw_blocks)
        for (int m : ms)
            if (m >= 0 && m < ctx.n) seen[m] = 1;
    for (auto [m, s2] : zero)
        if (m >= 0 && m < ctx.n) seen[m] = 1;
    for (int i = 0; i < ctx.n; ++i)
        if (!seen[i]) throw error("parse: ground index " + std::to_string(i + 1) + " is missing");
    return canonicalize(ctx, raw_blocks, zero);
}

nlohmann::json element_to_json(const DowlingContext& ctx, const DowlingElement& e) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& blk : e.blocks) {
        nlohmann::json members = nlohmann::json::array();
        nlohmann::json colors = nlohmann::json::array();
        for (std::size_t k = 0; k < blk.members.size(); ++k) {
            members.push_back(blk.members[k] + 1);
            colors.push_back(ctx.group().elements[blk.colors[k]]);
        }
        blocks.push_back({{"members", members}, {"colors", colors}});
    }
    nlohmann::json zm = nlohmann::json::array();
    nlohmann::json zc = nlohmann::json::array();
    for (std::size_t k = 0; k < e.zero_members.size(); ++k) {
        zm.push_back(e.zero_members[k] + 1);
        zc.push_back(ctx.action.points[e.zero_colors[k]]);
    }
    return nlohmann::json{
        {"n", e.n}, {"blocks", blocks}, {"zero", {{"members", zm}, {"colors", zc}}}};
}

DowlingElement element_from_json(const DowlingContext& ctx, const nlohmann::json& j) {
    std::unordered_map<std::string, int> group_index, point_index;
    for (int i = 0; i < ctx.group().order(); ++i) group_index[ctx.group().elements[i]] = i;
    for (int i = 0; i < ctx.n_points(); ++i) point_index[ctx.action.points[i]] = i;

    if (j.at("n").get<int>() != ctx.n)
        throw error("element json: ground-set size does not match the context");
    std::vector<std::pair<std::vector<int>, std::vector<int>>> raw_blocks;
    for (const auto& blk : j.at("blocks")) {
        std::vector<int> members, colors;
        for (const auto& m : blk.at("members")) members.push_back(m.get<int>() - 1);
        for (const auto& c : blk.at("colors")) {
            auto it = group_index.find(c.get<std::string>());
            if (it == group_index.end()) throw error("element json: unknown group element");
            colors.push_back(it->second);
        }
        raw_blocks.emplace_back(std::move(members), std::move(colors));
    }
    std::vector<std::pair<int, int>> zero;
    const auto& z = j.at("zero");
    const auto& zm = z.at("members");
    const auto& zc = z.at("colors");
    if (zm.size() != zc.size()) throw error("element json: zero coloring is not total");
    for (std::size_t k = 0; k < zm.size(); ++k) {
        auto it = point_index.find(zc[k].get<std::string>());
        if (it == point_index.end()) throw error("element json: unknown point");
        zero.emplace_back(zm[k].get<int>() - 1, it->second);
    }
    return canonicalize(ctx, raw_blocks, zero);
}

}  // namespace dowlingkit
