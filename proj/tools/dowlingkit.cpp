// Command-line front end: enumerate S-Dowling posets, compute invariants,
// emit Hasse diagrams, count points over finite models, and run the full
// cross-validation grid.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dowlingkit/fixtures.hpp"
#include "dowlingkit/invariants.hpp"
#include "dowlingkit/verify.hpp"

using nlohmann::json;
using namespace dowlingkit;

namespace {

struct CommonOpts {
    std::string group = "Z2";
    std::string action = "trivial1";
    int n = 2;
    std::string remove = "all";
    std::string format = "text";
    std::size_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 12345;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw error("parse error in '" + path + "': " + ex.what());
    }
}

GSetAction resolve_action(const CommonOpts& opts) {
    if (opts.action.find(".json") != std::string::npos || opts.action.find('/') != std::string::npos)
        return action_from_json(load_json_file(opts.action));
    FiniteGroup g = fixtures::group_by_name(opts.group);
    return fixtures::action_by_name(g, opts.action);
}

/// T-spec: "all" (unfiltered), "none" (no singleton zero fibers anywhere), or
/// a comma-separated list of point names whose orbits allow singletons. The
/// named set must be a union of G-orbits.
std::vector<int> resolve_allowed_orbits(const GSetAction& action, const OrbitData& orbits,
                                        const std::string& spec) {
    std::vector<int> allowed;
    if (spec == "all") {
        for (int o = 0; o < orbits.n_orbits(); ++o) allowed.push_back(o);
        return allowed;
    }
    if (spec == "none") return allowed;
    std::vector<char> named(action.n_points(), 0);
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto it = std::find(action.points.begin(), action.points.end(), tok);
        if (it == action.points.end()) throw error("remove-spec: unknown point '" + tok + "'");
        named[it - action.points.begin()] = 1;
    }
    for (int o = 0; o < orbits.n_orbits(); ++o) {
        bool any = false, all = true;
        for (int p : orbits.orbits[o]) {
            any = any || named[p];
            all = all && named[p];
        }
        if (any && !all) throw error("remove-spec: set is not G-invariant");
        if (all) allowed.push_back(o);
    }
    return allowed;
}

DowlingContext resolve_context(const CommonOpts& opts) {
    GSetAction action = resolve_action(opts);
    OrbitData od = orbit_data(action);
    std::vector<int> allowed = resolve_allowed_orbits(action, od, opts.remove);
    return make_context(opts.n, std::move(action), allowed);
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--group", opts.group, "built-in group name (Z1..Z12)");
    cmd->add_option("--action", opts.action,
                    "built-in action name or path to a JSON action spec");
    cmd->add_option("--remove", opts.remove,
                    "T-spec: all | none | comma-separated point names");
    cmd->add_option("--n", opts.n, "ground-set size")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--cap", opts.cap, "enumeration size cap");
    cmd->add_option("--seed", opts.seed, "seed for sampled checks");
}

int emit_match(const CommonOpts& opts, const std::string& what, const json& payload,
               bool match, const std::string& text) {
    if (opts.format == "json") {
        json out = payload;
        out["command"] = what;
        out["match"] = match;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return match ? 0 : 1;
}

int cmd_enumerate(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    DowlingPoset dp = enumerate_poset(ctx, opts.cap);
    if (opts.format == "json") {
        std::cout << poset_to_json(dp.poset).dump(2) << "\n";
        return 0;
    }
    if (opts.format == "dot") {
        write_dot(std::cout, dp.poset);
        return 0;
    }
    std::vector<int> by_rank(dp.poset.max_rank() + 1, 0);
    for (int i = 0; i < dp.poset.size(); ++i) ++by_rank[dp.poset.rank(i)];
    std::cout << "elements: " << dp.poset.size() << " (by rank:";
    for (int c : by_rank) std::cout << " " << c;
    std::cout << ")\ncovers: " << dp.poset.covers().size() << "\n";
    for (int i = 0; i < dp.poset.size(); ++i)
        std::cout << i << "\trank " << dp.poset.rank(i) << "\t" << dp.poset.label(i) << "\n";
    return 0;
}

int cmd_charpoly(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    DowlingPoset dp = enumerate_poset(ctx, opts.cap);
    const bool full_poset = !ctx.filtered();
    const int size_s = ctx.n_points();
    const int ambient = (full_poset && size_s == 0) ? opts.n - 1 : dp.poset.max_rank();
    IntPolynomial brute = char_poly_bruteforce(dp.poset, std::max(ambient, 0));
    if (!full_poset) {
        std::ostringstream text;
        text << "bruteforce: " << brute.str() << "\n"
             << "factored:   (no closed form for invariant subposets)\n";
        return emit_match(opts, "charpoly", json{{"bruteforce", brute.to_json()}}, true,
                          text.str());
    }
    IntPolynomial closed = char_poly_factored(opts.n, ctx.group().order(), size_s);
    bool match = brute == closed;
    std::ostringstream text;
    text << "factored:   " << closed.str() << "\n"
         << "bruteforce: " << brute.str() << "\n"
         << (match ? "MATCH" : "MISMATCH") << "\n";
    return emit_match(opts, "charpoly",
                      json{{"factored", closed.to_json()}, {"bruteforce", brute.to_json()}},
                      match, text.str());
}

int cmd_orbits(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    DowlingPoset dp = enumerate_poset(ctx, opts.cap);
    if (opts.format == "dot") {
        write_dot(std::cout, quotient_poset(ctx, dp).poset, "orbits");
        return 0;
    }
    WreathOrbitPartition parts = orbits_bruteforce(ctx, dp);
    std::vector<std::string> names = orbit_names(ctx);

    std::map<LabeledPartition, int> fiber_size;
    bool match = true;
    for (std::size_t i = 0; i < dp.elements.size(); ++i)
        ++fiber_size[orbit_label(ctx, dp.elements[i])];
    // each brute orbit must be exactly one fiber
    for (const auto& orbit : parts.orbits) {
        LabeledPartition lp = orbit_label(ctx, dp.elements[orbit.front()]);
        if (fiber_size.count(lp) == 0 ||
            fiber_size[lp] != static_cast<int>(orbit.size())) {
            match = false;
            break;
        }
        for (int id : orbit)
            if (!(orbit_label(ctx, dp.elements[id]) == lp)) match = false;
    }
    if (fiber_size.size() != parts.orbits.size()) match = false;

    std::ostringstream text;
    json rows = json::array();
    text << parts.orbits.size() << " orbits\n";
    for (const auto& orbit : parts.orbits) {
        LabeledPartition lp = orbit_label(ctx, dp.elements[orbit.front()]);
        text << render(lp, names) << "\tsize " << orbit.size() << "\trep "
             << dp.poset.label(orbit.front()) << "\n";
        rows.push_back({{"label", render(lp, names)},
                        {"size", orbit.size()},
                        {"representative", dp.poset.label(orbit.front())}});
    }
    text << (match ? "MATCH" : "MISMATCH") << " (orbit-label fibers vs brute orbits)\n";
    return emit_match(opts, "orbits", json{{"orbits", rows}}, match, text.str());
}

int cmd_whitney(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    DowlingPoset dp = enumerate_poset(ctx, opts.cap);
    std::vector<long long> ranks = whitney_ranks(dp.poset);
    std::ostringstream text;
    json payload;
    payload["mu_sums"] = ranks;
    text << "|mu|-sums by rank:";
    for (long long w : ranks) text << " " << w;
    text << "\n";
    bool match = true;
    if (!ctx.filtered() && ctx.n_points() >= 1) {
        IntPolynomial hilbert = whitney_hilbert(opts.n, ctx.group().order(), ctx.n_points());
        text << "hilbert series:    " << hilbert.str() << "\n";
        payload["hilbert"] = hilbert.to_json();
        match = hilbert.degree() == static_cast<int>(ranks.size()) - 1;
        for (std::size_t r = 0; match && r < ranks.size(); ++r)
            match = hilbert.coeff(static_cast<int>(r)) == ranks[r];
        text << (match ? "MATCH" : "MISMATCH") << "\n";
    } else {
        text << "hilbert series:    (stated only for the full poset with nonempty S)\n";
    }
    return emit_match(opts, "whitney", payload, match, text.str());
}

int cmd_reps(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    if (ctx.filtered() || ctx.n_points() < 1)
        throw error("reps: stated only for the full poset with nonempty S");
    IntPolynomial hilbert = whitney_hilbert(opts.n, ctx.group().order(), ctx.n_points());
    std::vector<std::string> names = orbit_names(ctx);
    std::ostringstream text;
    json payload = json::array();
    bool match = true;
    for (int r = 0; r <= opts.n; ++r) {
        BigInt total = 0;
        json summands = json::array();
        text << "WH_" << r << ":\n";
        for (const auto& s : rep_decomposition(ctx, r)) {
            total += s.induced_dim;
            text << "  " << render(s.label, names) << "\tstab " << s.stabilizer_order.str()
                 << "\tinner " << s.inner_dim.str() << "\tinduced " << s.induced_dim.str()
                 << "\n";
            summands.push_back({{"label", render(s.label, names)},
                                {"stabilizer_order", s.stabilizer_order.str()},
                                {"inner_dim", s.inner_dim.str()},
                                {"induced_dim", s.induced_dim.str()}});
        }
        bool row_match = total == hilbert.coeff(r);
        match = match && row_match;
        text << "  total " << total.str() << " vs coefficient " << hilbert.coeff(r).str()
             << (row_match ? " MATCH" : " MISMATCH") << "\n";
        payload.push_back({{"r", r},
                           {"summands", summands},
                           {"total", total.str()},
                           {"coefficient", hilbert.coeff(r).str()}});
    }
    return emit_match(opts, "reps", json{{"ranks", payload}}, match, text.str());
}

int cmd_hasse(const CommonOpts& opts) {
    DowlingContext ctx = resolve_context(opts);
    DowlingPoset dp = enumerate_poset(ctx, opts.cap);
    if (opts.format == "json")
        std::cout << poset_to_json(dp.poset).dump(2) << "\n";
    else
        write_dot(std::cout, dp.poset);
    return 0;
}

struct CountOpts {
    std::string space = "gm";
    int q = 7;
    int d = 2;
    bool ginv = false;
    bool trans = false;
    int n = 2;
    std::string remove = "all";
    std::string format = "text";
    std::size_t cap = kDefaultEnumerationCap;
};

int cmd_count(const CountOpts& opts) {
    FiniteGSpace space;
    if (opts.ginv && opts.trans) throw error("count: --ginv and --trans are exclusive");
    if (opts.space == "affine") {
        space = fixtures::affine_mu_d(opts.q, opts.d);
    } else if (opts.space == "gm") {
        if (opts.trans)
            space = fixtures::multiplicative_translation(opts.q, opts.d);
        else
            space = fixtures::multiplicative_inversion(opts.q);
    } else {
        space = space_from_json(load_json_file(opts.space));
    }

    // T-spec: all = the singular set, none = empty, or point names
    std::vector<int> removed;
    if (opts.remove == "all") {
        removed = space.singular;
    } else if (opts.remove != "none") {
        std::stringstream ss(opts.remove);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto it = std::find(space.points.begin(), space.points.end(), tok);
            if (it == space.points.end()) throw error("remove-spec: unknown point '" + tok + "'");
            removed.push_back(static_cast<int>(it - space.points.begin()));
        }
        std::sort(removed.begin(), removed.end());
        removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    }

    BigInt brute = orbit_config_count(space, opts.n, removed);
    BigInt formula;
    std::string formula_kind;
    if (removed == space.singular) {
        formula = motive_eval(BigInt(space.n_points()), opts.n, space.group.order(),
                              static_cast<int>(space.singular.size()));
        formula_kind = "closed form";
    } else {
        // no closed form off the singular set: sum mu over the enumerated
        // subposet of D_n(G, T ∪ S)
        std::vector<int> union_pts = space.singular;
        union_pts.insert(union_pts.end(), removed.begin(), removed.end());
        std::sort(union_pts.begin(), union_pts.end());
        union_pts.erase(std::unique(union_pts.begin(), union_pts.end()), union_pts.end());
        std::vector<int> pos(space.n_points(), -1);
        for (std::size_t i = 0; i < union_pts.size(); ++i)
            pos[union_pts[i]] = static_cast<int>(i);
        std::vector<std::string> names;
        for (int p : union_pts) names.push_back(space.points[p]);
        std::vector<std::vector<int>> act(space.group.order(),
                                          std::vector<int>(union_pts.size()));
        for (int g = 0; g < space.group.order(); ++g)
            for (std::size_t i = 0; i < union_pts.size(); ++i) {
                int img = pos[space.apply(g, union_pts[i])];
                if (img < 0) throw error("count: removed set is not G-invariant");
                act[g][i] = img;
            }
        GSetAction action = make_action(space.group, std::move(names), std::move(act));
        OrbitData od = orbit_data(action);
        std::vector<int> allowed;
        for (int o = 0; o < od.n_orbits(); ++o) {
            bool in_t = std::binary_search(removed.begin(), removed.end(),
                                           union_pts[od.orbits[o].front()]);
            if (in_t) allowed.push_back(o);
        }
        DowlingContext ctx = make_context(opts.n, std::move(action), allowed);
        DowlingPoset dp = enumerate_poset(ctx, opts.cap);
        formula = poset_motive_eval(dp.poset, opts.n, BigInt(space.n_points()));
        formula_kind = "poset Möbius sum";
    }

    bool match = brute == formula;
    std::ostringstream text;
    text << "brute=" << brute.str() << " formula=" << formula.str() << " ("
         << formula_kind << ") " << (match ? "MATCH" : "MISMATCH") << "\n";
    json payload{{"brute", brute.str()}, {"formula", formula.str()}, {"kind", formula_kind}};
    if (opts.format == "json") {
        payload["match"] = match;
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return match ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, int max_n) {
    std::vector<CheckResult> results = run_verification(max_n, opts.seed, opts.cap);
    int failures = 0;
    json rows = json::array();
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        if (opts.format == "json") {
            rows.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        }
    }
    if (opts.format == "json") {
        std::cout << json{{"checks", rows}, {"failures", failures}}.dump(2) << "\n";
    } else {
        std::cout << results.size() << " checks, " << failures << " failure(s)\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dowlingkit: S-Dowling posets, their invariants, and cross-validation"};
    app.require_subcommand(1);

    CommonOpts opts;
    if (const char* env_cap = std::getenv("DOWLINGKIT_CAP")) {
        try {
            opts.cap = std::stoull(env_cap);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed DOWLINGKIT_CAP\n";
        }
    }
    CountOpts copts;
    copts.cap = opts.cap;
    int verify_max_n = 4;

    add_common(app.add_subcommand("enumerate", "enumerate a poset"), opts);
    add_common(app.add_subcommand("charpoly", "factored vs brute-force characteristic polynomial"),
               opts);
    add_common(app.add_subcommand("orbits", "wreath-product orbits vs labeled partitions"), opts);
    add_common(app.add_subcommand("whitney", "Whitney homology dimensions"), opts);
    add_common(app.add_subcommand("reps", "Whitney homology representation dimensions"), opts);
    add_common(app.add_subcommand("hasse", "Hasse diagram (DOT by default)"), opts);

    CLI::App* count = app.add_subcommand("count", "finite-field orbit configuration counts");
    count->add_option("--space", copts.space, "affine | gm | path to a JSON space spec");
    count->add_option("--q", copts.q, "field size (prime)");
    count->add_option("--d", copts.d, "mu_d order for affine scaling / gm translation");
    count->add_flag("--ginv", copts.ginv, "gm: act by inversion (default)");
    count->add_flag("--trans", copts.trans, "gm: act by mu_d translation (free)");
    count->add_option("--n", copts.n, "number of points")->check(CLI::PositiveNumber);
    count->add_option("--remove", copts.remove, "T-spec: all | none | comma-separated points");
    count->add_option("--format", copts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    count->add_option("--cap", copts.cap, "enumeration size cap");

    CLI::App* verify = app.add_subcommand("verify", "run the full cross-validation grid");
    verify->add_option("--max-n", verify_max_n, "largest ground-set size in the grid");
    verify->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--cap", opts.cap, "enumeration size cap");
    verify->add_option("--seed", opts.seed, "seed for sampled checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("enumerate")) return cmd_enumerate(opts);
        if (app.got_subcommand("charpoly")) return cmd_charpoly(opts);
        if (app.got_subcommand("orbits")) return cmd_orbits(opts);
        if (app.got_subcommand("whitney")) return cmd_whitney(opts);
        if (app.got_subcommand("reps")) return cmd_reps(opts);
        if (app.got_subcommand("hasse")) return cmd_hasse(opts);
        if (app.got_subcommand("count")) return cmd_count(copts);
        if (app.got_subcommand("verify")) return cmd_verify(opts, verify_max_n);
    } catch (const resource_error& ex) {
        std::cerr << "resource error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
