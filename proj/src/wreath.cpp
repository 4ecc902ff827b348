#include "dowlingkit/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dowlingkit {

WreathElement wreath_identity(int n) {
    WreathElement w;
    w.gs.assign(n, 0);
    w.sigma.resize(n);
    std::iota(w.sigma.begin(), w.sigma.end(), 0);
    return w;
}

namespace {

void check_wreath(const FiniteGroup& g, const WreathElement& w, int n) {
    if (static_cast<int>(w.gs.size()) != n || static_cast<int>(w.sigma.size()) != n)
        throw error("wreath element: wrong arity");
    std::vector<char> hit(n, 0);
    for (int v : w.sigma) {
        if (v < 0 || v >= n || hit[v]) throw error("wreath element: sigma is not a permutation");
        hit[v] = 1;
    }
    for (int v : w.gs)
        if (v < 0 || v >= g.order()) throw error("wreath element: group index out of range");
}

}  // namespace

WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b) {
    const int n = static_cast<int>(a.sigma.size());
    check_wreath(g, a, n);
    check_wreath(g, b, n);
    WreathElement out;
    out.gs.resize(n);
    out.sigma.resize(n);
    for (int j = 0; j < n; ++j) {
        out.sigma[j] = a.sigma[b.sigma[j]];
        out.gs[j] = g.mul(a.gs[b.sigma[j]], b.gs[j]);
    }
    return out;
}

DowlingElement act(const DowlingContext& ctx, const WreathElement& w, const DowlingElement& e) {
    check_wreath(ctx.group(), w, e.n);
    DowlingElement out;
    out.n = e.n;
    for (const auto& blk : e.blocks) {
        DowlingBlock nb;
        for (std::size_t k = 0; k < blk.members.size(); ++k) {
            int j = blk.members[k];
            nb.members.push_back(w.sigma[j]);
            nb.colors.push_back(ctx.group().mul(w.gs[j], blk.colors[k]));
        }
        out.blocks.push_back(std::move(nb));
    }
    for (std::size_t k = 0; k < e.zero_members.size(); ++k) {
        int j = e.zero_members[k];
        out.zero_members.push_back(w.sigma[j]);
        out.zero_colors.push_back(ctx.action.apply(w.gs[j], e.zero_colors[k]));
    }
    renormalize(ctx.group(), out);
    return out;
}

int LabeledPartition::total() const {
    int t = 0;
    for (int v : unlabeled) t += v;
    for (int v : labeled) t += v;
    return t;
}

std::string render(const LabeledPartition& lp, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "(";
    if (lp.unlabeled.empty()) {
        os << "0";
    } else {
        for (std::size_t i = 0; i < lp.unlabeled.size(); ++i) {
            if (i) os << ",";
            os << lp.unlabeled[i];
        }
    }
    os << " || ";
    bool any = false;
    for (std::size_t o = 0; o < lp.labeled.size(); ++o) {
        if (lp.labeled[o] == 0) continue;
        if (any) os << ", ";
        os << lp.labeled[o] << "_" << (o < names.size() ? names[o] : std::to_string(o));
        any = true;
    }
    if (!any) os << "0";
    os << ")";
    return os.str();
}

std::vector<std::string> orbit_names(const DowlingContext& ctx) {
    std::vector<std::string> names;
    names.reserve(ctx.orbits.n_orbits());
    for (int o = 0; o < ctx.orbits.n_orbits(); ++o)
        names.push_back(ctx.action.points[ctx.orbits.rep[o]]);
    return names;
}

LabeledPartition orbit_label(const DowlingContext& ctx, const DowlingElement& e) {
    LabeledPartition lp;
    lp.unlabeled.reserve(e.blocks.size());
    for (const auto& blk : e.blocks) lp.unlabeled.push_back(static_cast<int>(blk.members.size()));
    std::sort(lp.unlabeled.rbegin(), lp.unlabeled.rend());
    lp.labeled.assign(ctx.orbits.n_orbits(), 0);
    for (int s : e.zero_colors) ++lp.labeled[ctx.orbits.orbit_of[s]];
    return lp;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LabeledPartition> labeled_partitions(int n, int n_orbits,
                                                 const std::vector<int>& forbidden) {
    std::vector<char> is_forbidden(n_orbits, 0);
    for (int o : forbidden) {
        if (o < 0 || o >= n_orbits) throw error("labeled_partitions: orbit index out of range");
        is_forbidden[o] = 1;
    }
    std::vector<LabeledPartition> out;
    std::vector<int> labeled(n_orbits, 0);
    // choose the labeled sizes orbit by orbit, then partition the rest
    auto rec = [&](auto&& self, int orbit, int used) -> void {
        if (orbit == n_orbits) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_of(n - used, n, cur, parts);
            for (auto& p : parts) {
                LabeledPartition lp;
                lp.unlabeled = std::move(p);
                lp.labeled = labeled;
                out.push_back(std::move(lp));
            }
            return;
        }
        for (int v = 0; v + used <= n; ++v) {
            if (v == 1 && is_forbidden[orbit]) continue;
            labeled[orbit] = v;
            self(self, orbit + 1, used + v);
        }
        labeled[orbit] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

QuotientPoset quotient_poset(const DowlingContext& ctx, const DowlingPoset& dp) {
    std::map<LabeledPartition, std::vector<int>> fibers;
    for (std::size_t i = 0; i < dp.elements.size(); ++i)
        fibers[orbit_label(ctx, dp.elements[i])].push_back(static_cast<int>(i));

    QuotientPoset q;
    std::vector<const std::vector<int>*> fiber_of;
    for (const auto& [lp, members] : fibers) {
        q.labels.push_back(lp);
        fiber_of.push_back(&members);
    }
    const int m = static_cast<int>(q.labels.size());
    const int n = ctx.n;

    auto comparable = [&](int lo, int hi) {
        for (int a : *fiber_of[lo])
            for (int b : *fiber_of[hi])
                if (dp.poset.leq(a, b)) return true;
        return false;
    };

    // the image order is graded by n - l, so rank-adjacent comparabilities
    // are exactly the covers
    std::vector<int> rank(m);
    std::vector<std::string> names(m);
    std::vector<std::string> onames = orbit_names(ctx);
    for (int i = 0; i < m; ++i) {
        rank[i] = q.labels[i].rank(n);
        names[i] = render(q.labels[i], onames);
    }
    std::vector<std::pair<int, int>> covers;
    for (int lo = 0; lo < m; ++lo)
        for (int hi = 0; hi < m; ++hi)
            if (rank[hi] == rank[lo] + 1 && comparable(lo, hi)) covers.emplace_back(lo, hi);
    q.poset = RankedPoset(m, std::move(covers), std::move(rank), std::move(names));
    return q;
}

WreathOrbitPartition orbits_bruteforce(const DowlingContext& ctx, const DowlingPoset& dp) {
    const int n = ctx.n;
    std::vector<WreathElement> generators;
    for (int gen : minimal_generators(ctx.group())) {
        for (int coord = 0; coord < n; ++coord) {
            WreathElement w = wreath_identity(n);
            w.gs[coord] = gen;
            generators.push_back(std::move(w));
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        WreathElement w = wreath_identity(n);
        std::swap(w.sigma[i], w.sigma[i + 1]);
        generators.push_back(std::move(w));
    }

    WreathOrbitPartition part;
    part.orbit_of.assign(dp.elements.size(), -1);
    for (std::size_t seed = 0; seed < dp.elements.size(); ++seed) {
        if (part.orbit_of[seed] >= 0) continue;
        const int o = static_cast<int>(part.orbits.size());
        std::vector<int> orbit = {static_cast<int>(seed)};
        part.orbit_of[seed] = o;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& w : generators) {
                DowlingElement img = act(ctx, w, dp.elements[orbit[head]]);
                int id = dp.index_of(img);
                if (id < 0)
                    throw error("orbits_bruteforce: action left the enumerated poset");
                if (part.orbit_of[id] < 0) {
                    part.orbit_of[id] = o;
                    orbit.push_back(id);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

}  // namespace dowlingkit
