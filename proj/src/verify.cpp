#include "dowlingkit/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dowlingkit/fixtures.hpp"

namespace dowlingkit {

namespace {

CheckResult make_check(std::string name, bool pass, std::string detail = "") {
    return CheckResult{std::move(name), pass, std::move(detail)};
}

long long binom2(long long k) { return k * (k - 1) / 2; }

std::vector<int> sample_indices(int size, int want, std::uint64_t seed) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    if (size <= want) return idx;
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(want);
    return idx;
}

}  // namespace

std::vector<GridInstance> build_verification_grid(int max_n, std::size_t cap) {
    std::vector<GridInstance> grid;
    for (const char* gname : {"Z1", "Z2", "Z3", "Z4", "Z6"}) {
        FiniteGroup g = fixtures::group_by_name(gname);
        for (const auto& aname : fixtures::action_names_for(g)) {
            for (int n = 1; n <= max_n; ++n) {
                GridInstance inst;
                inst.name = std::string(gname) + "/" + aname + "/n=" + std::to_string(n);
                inst.action_name = aname;
                inst.n = n;
                inst.ctx = make_context(n, fixtures::action_by_name(g, aname));
                inst.dp = enumerate_poset(inst.ctx, cap);
                inst.mob = mobius_table(inst.dp.poset);
                grid.push_back(std::move(inst));
            }
        }
    }
    return grid;
}

std::vector<CheckResult> verify_charpoly(const std::vector<GridInstance>& grid) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        const int size_s = inst.ctx.n_points();
        const int ambient = size_s > 0 ? inst.n : inst.n - 1;
        IntPolynomial brute = char_poly_bruteforce(inst.dp.poset, inst.mob, std::max(ambient, 0));
        IntPolynomial closed = char_poly_factored(inst.n, inst.ctx.group().order(), size_s);
        bool pass = brute == closed;
        out.push_back(make_check("charpoly/" + inst.name, pass,
                                 pass ? brute.str()
                                      : "brute " + brute.str() + " != closed " + closed.str()));
    }
    return out;
}

std::vector<CheckResult> verify_covering_law(const std::vector<GridInstance>& grid,
                                             std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        const long long size_s = inst.ctx.n_points();
        const long long size_g = inst.ctx.group().order();
        std::vector<int> ids;
        if (inst.n <= 3) {
            ids.resize(inst.dp.elements.size());
            std::iota(ids.begin(), ids.end(), 0);
        } else {
            ids = sample_indices(static_cast<int>(inst.dp.elements.size()), 200, seed);
        }
        bool pass = true;
        std::string detail;
        for (int id : ids) {
            const DowlingElement& e = inst.dp.elements[id];
            long long ell = e.n_blocks();
            long long expected = ell * size_s + binom2(ell) * size_g;
            long long got = static_cast<long long>(covers_up(inst.ctx, e).size());
            if (got != expected) {
                pass = false;
                detail = inst.dp.poset.label(id) + ": " + std::to_string(got) + " covers, want " +
                         std::to_string(expected);
                break;
            }
        }
        out.push_back(make_check("covers/" + inst.name, pass, detail));
    }
    return out;
}

std::vector<CheckResult> verify_leq_reachability(const std::vector<GridInstance>& grid,
                                                 std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        const int n_el = static_cast<int>(inst.dp.elements.size());
        std::vector<int> ids;
        if (inst.n <= 3) {
            ids.resize(n_el);
            std::iota(ids.begin(), ids.end(), 0);
        } else {
            ids = sample_indices(n_el, 60, seed ^ 0x5eedULL);
        }
        bool pass = true;
        std::string detail;
        for (int a : ids) {
            for (int b : ids) {
                bool direct = leq(inst.ctx, inst.dp.elements[a], inst.dp.elements[b]);
                if (direct != inst.dp.poset.leq(a, b)) {
                    pass = false;
                    detail = inst.dp.poset.label(a) + " vs " + inst.dp.poset.label(b);
                    break;
                }
            }
            if (!pass) break;
        }
        out.push_back(make_check("leq/" + inst.name, pass, detail));
    }
    return out;
}

std::vector<CheckResult> verify_orbit_theorem(const std::vector<GridInstance>& grid,
                                              int n_cutoff) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        if (inst.n > n_cutoff) continue;
        WreathOrbitPartition parts = orbits_bruteforce(inst.ctx, inst.dp);
        // fibers of pi_n
        std::map<LabeledPartition, std::vector<int>> fibers;
        for (std::size_t i = 0; i < inst.dp.elements.size(); ++i)
            fibers[orbit_label(inst.ctx, inst.dp.elements[i])].push_back(static_cast<int>(i));
        bool pass = fibers.size() == parts.orbits.size();
        if (pass) {
            std::set<std::vector<int>> fiber_set, orbit_set;
            for (auto& [lp, members] : fibers) fiber_set.insert(members);
            for (auto& members : parts.orbits) orbit_set.insert(members);
            pass = fiber_set == orbit_set;
        }
        // every labeled partition of n must be realized
        auto all = labeled_partitions(inst.n, inst.ctx.orbits.n_orbits(), {});
        bool onto = all.size() == fibers.size();
        out.push_back(make_check("orbits/" + inst.name, pass && onto,
                                 std::to_string(parts.orbits.size()) + " orbits, " +
                                     std::to_string(all.size()) + " labeled partitions"));
    }
    return out;
}

std::vector<CheckResult> verify_interval_decomposition(const std::vector<GridInstance>& grid) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        bool pass = true;
        std::string detail;
        const int bottom = inst.dp.poset.bottom();
        for (int id = 0; id < static_cast<int>(inst.dp.elements.size()) && pass; ++id) {
            RankedPoset sub = interval(inst.dp.poset, bottom, id);
            IntPolynomial brute = char_poly_bruteforce(sub, inst.dp.elements[id].rank());
            IntPolynomial product(BigInt(1), "t");
            for (const auto& f : interval_factors(inst.ctx, inst.dp.elements[id]))
                product *= f.char_poly();
            if (!(brute == product)) {
                pass = false;
                detail = inst.dp.poset.label(id) + ": " + brute.str() + " != " + product.str();
            }
        }
        out.push_back(make_check("intervals/" + inst.name, pass, detail));
    }
    return out;
}

std::vector<CheckResult> verify_whitney(const std::vector<GridInstance>& grid) {
    std::vector<CheckResult> out;
    for (const auto& inst : grid) {
        const int size_s = inst.ctx.n_points();
        if (size_s < 1) continue;
        IntPolynomial hilbert = whitney_hilbert(inst.n, inst.ctx.group().order(), size_s);
        std::vector<long long> ranks = whitney_ranks(inst.dp.poset, inst.mob);
        bool pass = hilbert.degree() == static_cast<int>(ranks.size()) - 1;
        for (std::size_t r = 0; pass && r < ranks.size(); ++r)
            pass = hilbert.coeff(static_cast<int>(r)) == ranks[r];
        for (int r = 0; pass && r <= inst.n; ++r) {
            BigInt total = 0;
            for (const auto& s : rep_decomposition(inst.ctx, r)) total += s.induced_dim;
            pass = total == hilbert.coeff(r);
        }
        out.push_back(make_check("whitney/" + inst.name, pass, hilbert.str()));
    }
    return out;
}

std::vector<CheckResult> verify_finite_field_counts() {
    std::vector<CheckResult> out;
    auto check_space = [&](const std::string& name, const FiniteGSpace& space, int n,
                           const std::vector<int>& removed, int size_s) {
        BigInt brute = orbit_config_count(space, n, removed);
        BigInt formula = motive_eval(BigInt(space.n_points()), n, space.group.order(), size_s);
        out.push_back(make_check("count/" + name, brute == formula,
                                 "brute=" + brute.str() + " formula=" + formula.str()));
    };
    for (int d : {2, 3}) {
        for (int q : {5, 7, 13}) {
            if ((q - 1) % d != 0) continue;  // mu_d does not embed
            FiniteGSpace space = fixtures::affine_mu_d(q, d);
            for (int n = 1; n <= 3; ++n)
                check_space("affine/q=" + std::to_string(q) + "/d=" + std::to_string(d) +
                                "/n=" + std::to_string(n),
                            space, n, space.singular, static_cast<int>(space.singular.size()));
        }
    }
    for (int q : {7, 11, 13}) {
        FiniteGSpace space = fixtures::multiplicative_inversion(q);
        for (int n = 1; n <= 3; ++n)
            check_space("gm-inv/q=" + std::to_string(q) + "/n=" + std::to_string(n), space, n,
                        space.singular, static_cast<int>(space.singular.size()));
    }
    for (int d : {2, 3}) {
        for (int q : {7, 13}) {
            FiniteGSpace space = fixtures::multiplicative_translation(q, d);
            for (int n = 1; n <= 3; ++n)
                check_space("gm-trans/q=" + std::to_string(q) + "/d=" + std::to_string(d) +
                                "/n=" + std::to_string(n),
                            space, n, {}, 0);
        }
    }
    return out;
}

std::vector<CheckResult> verify_euler_identities() {
    std::vector<CheckResult> out;
    struct Family {
        int size_g, size_s;
        const char* name;
        BigInt (*expected)(int);
    };
    const Family families[] = {
        {2, 2, "euler/(-2)^n n!", [](int n) { return int_pow(-2, n) * factorial(n); }},
        {2, 4, "euler/(-2)^n (n+1)!", [](int n) { return int_pow(-2, n) * factorial(n + 1); }},
        {6, 6, "euler/(-6)^n n!", [](int n) { return int_pow(-6, n) * factorial(n); }},
        {4, 4, "euler/(-4)^n n!", [](int n) { return int_pow(-4, n) * factorial(n); }},
    };
    for (const auto& f : families) {
        bool pass = true;
        std::string detail;
        for (int n = 1; n <= 6; ++n) {
            BigInt got = motive_eval(BigInt(0), n, f.size_g, f.size_s);
            if (got != f.expected(n)) {
                pass = false;
                detail = "n=" + std::to_string(n) + ": " + got.str();
                break;
            }
        }
        out.push_back(make_check(f.name, pass, detail));
    }
    // binomial form vs the product, on a deterministic 100-point grid
    bool pass = true;
    std::string detail;
    int points = 0;
    for (int xc = -6; xc <= 13 && points < 100; ++xc) {
        for (int n = 1; n <= 5 && points < 100; ++n) {
            int size_g = (xc + 100) % 4 + 1;
            int size_s = (xc + n) % 4;
            BigInt a = euler_binomial_form(BigInt(xc), n, size_g, size_s);
            BigInt b = motive_eval(BigInt(xc), n, size_g, size_s);
            ++points;
            if (a != b) {
                pass = false;
                detail = "xc=" + std::to_string(xc) + " n=" + std::to_string(n);
                break;
            }
        }
    }
    out.push_back(make_check("euler/binomial-grid", pass,
                             pass ? std::to_string(points) + " points" : detail));
    return out;
}

std::vector<CheckResult> verify_subposet_suite(std::size_t cap) {
    std::vector<CheckResult> out;
    FiniteGroup z2 = cyclic_group(2);
    for (int n = 1; n <= 4; ++n) {
        DowlingContext ctx =
            make_context(n, fixtures::action_by_name(z2, "trivial1"), std::vector<int>{});
        DowlingPoset dp = enumerate_poset(ctx, cap);
        long long atoms = static_cast<long long>(dp.poset.elements_of_rank(1).size());
        long long expected = static_cast<long long>(n) * (n - 1);
        out.push_back(make_check("subposet/DD" + std::to_string(n) + "(Z2)/atoms",
                                 atoms == expected,
                                 std::to_string(atoms) + " atoms, want " +
                                     std::to_string(expected)));
        if (n == 3) {
            IntPolynomial brute = char_poly_bruteforce(dp.poset, n);
            IntPolynomial t = IntPolynomial::variable("t");
            IntPolynomial pinned = (t - IntPolynomial(BigInt(1), "t")) *
                                   (t - IntPolynomial(BigInt(2), "t")) *
                                   (t - IntPolynomial(BigInt(3), "t"));
            out.push_back(make_check("subposet/DD3(Z2)/charpoly", brute == pinned, brute.str()));
        }
    }
    return out;
}

std::vector<CheckResult> run_verification(int max_n, std::uint64_t seed, std::size_t cap) {
    std::vector<GridInstance> grid = build_verification_grid(max_n, cap);
    std::vector<CheckResult> all;
    auto append = [&](std::vector<CheckResult> more) {
        all.insert(all.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    append(verify_charpoly(grid));
    append(verify_covering_law(grid, seed));
    append(verify_leq_reachability(grid, seed));
    append(verify_orbit_theorem(grid));
    append(verify_interval_decomposition(grid));
    append(verify_whitney(grid));
    append(verify_finite_field_counts());
    append(verify_euler_identities());
    append(verify_subposet_suite(cap));
    return all;
}

}  // namespace dowlingkit
