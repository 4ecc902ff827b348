#include "dowlingkit/fixtures.hpp"

#include <algorithm>

namespace dowlingkit::fixtures {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int mod_pow(long long base, long long exp, int mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int primitive_root(int q) {
    std::vector<int> prime_factors;
    int m = q - 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (int g = 2; g < q; ++g) {
        bool ok = true;
        for (int p : prime_factors)
            if (mod_pow(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw error("primitive_root: no generator found (q not prime?)");
}

/// Cyclic action determined by the permutation image of the generator.
GSetAction cyclic_action(FiniteGroup g, std::vector<std::string> points,
                         const std::vector<int>& gen_image) {
    const int np = static_cast<int>(points.size());
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(np));
    for (int s = 0; s < np; ++s) act[0][s] = s;
    for (int k = 1; k < g.order(); ++k)
        for (int s = 0; s < np; ++s) act[k][s] = gen_image[act[k - 1][s]];
    return make_action(std::move(g), std::move(points), std::move(act));
}

}  // namespace

FiniteGroup group_by_name(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'Z') {
        int d = 0;
        try {
            d = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw error("unknown group '" + name + "'");
        }
        if (d >= 1 && d <= 12) return cyclic_group(d);
    }
    throw error("unknown group '" + name + "' (expected Z1..Z12)");
}

GSetAction action_by_name(const FiniteGroup& g, const std::string& name) {
    if (name == "empty") return trivial_action(g, {});
    if (name.rfind("trivial", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(name.substr(7));
        } catch (const std::exception&) {
            throw error("unknown action '" + name + "'");
        }
        if (k < 1 || k > 26) throw error("trivial action size out of range");
        if (k == 1) return trivial_action(g, {"0"});
        if (k == 2) return trivial_action(g, {"1", "-1"});
        std::vector<std::string> points;
        for (int i = 1; i <= k; ++i) points.push_back("s" + std::to_string(i));
        return trivial_action(g, std::move(points));
    }
    if (name == "signflip") {
        if (g.order() != 2) throw error("signflip action requires Z2");
        return cyclic_action(g, {"1", "-1"}, {1, 0});
    }
    if (name == "hexagonal") {
        if (g.order() != 6) throw error("hexagonal action requires Z6");
        // generator acts as (e)(z1 z2 z3)(w1 w2)
        return cyclic_action(g, {"e", "z1", "z2", "z3", "w1", "w2"}, {0, 2, 3, 1, 5, 4});
    }
    if (name == "square") {
        if (g.order() != 4) throw error("square action requires Z4");
        // generator acts as (e)(z1 z2)(t)
        return cyclic_action(g, {"e", "z1", "z2", "t"}, {0, 2, 1, 3});
    }
    if (name == "regular") {
        std::vector<std::vector<int>> act = g.table;  // left translation
        std::vector<std::string> points = g.elements;
        return make_action(g, std::move(points), std::move(act));
    }
    throw error("unknown action '" + name + "'");
}

std::vector<std::string> action_names_for(const FiniteGroup& g) {
    std::vector<std::string> names = {"empty", "trivial1", "trivial2"};
    if (g.order() > 1) names.push_back("regular");
    if (g.order() == 2) names.push_back("signflip");
    if (g.order() == 4) names.push_back("square");
    if (g.order() == 6) names.push_back("hexagonal");
    return names;
}

FiniteGSpace affine_mu_d(int q, int d) {
    if (!is_prime(q)) throw error("affine_mu_d: q must be prime");
    if (d < 1 || (q - 1) % d != 0) throw error("affine_mu_d: mu_d requires d | q-1");
    const int omega = mod_pow(primitive_root(q), (q - 1) / d, q);
    std::vector<std::string> points;
    for (int x = 0; x < q; ++x) points.push_back(std::to_string(x));
    FiniteGroup g = cyclic_group(d);
    std::vector<std::vector<int>> act(d, std::vector<int>(q));
    int scale = 1;
    for (int k = 0; k < d; ++k) {
        for (int x = 0; x < q; ++x) act[k][x] = static_cast<int>(1LL * scale * x % q);
        scale = static_cast<int>(1LL * scale * omega % q);
    }
    return make_space(std::move(points), std::move(g), std::move(act));
}

FiniteGSpace multiplicative_inversion(int q) {
    if (!is_prime(q)) throw error("multiplicative_inversion: q must be prime");
    std::vector<std::string> points;
    for (int x = 1; x < q; ++x) points.push_back(std::to_string(x));
    FiniteGroup g = cyclic_group(2);
    std::vector<std::vector<int>> act(2, std::vector<int>(q - 1));
    for (int x = 1; x < q; ++x) {
        act[0][x - 1] = x - 1;
        act[1][x - 1] = mod_pow(x, q - 2, q) - 1;  // inverse mod q
    }
    return make_space(std::move(points), std::move(g), std::move(act));
}

FiniteGSpace multiplicative_translation(int q, int d) {
    if (!is_prime(q)) throw error("multiplicative_translation: q must be prime");
    if (d < 1 || (q - 1) % d != 0) throw error("multiplicative_translation: requires d | q-1");
    const int omega = mod_pow(primitive_root(q), (q - 1) / d, q);
    std::vector<std::string> points;
    for (int x = 1; x < q; ++x) points.push_back(std::to_string(x));
    FiniteGroup g = cyclic_group(d);
    std::vector<std::vector<int>> act(d, std::vector<int>(q - 1));
    int scale = 1;
    for (int k = 0; k < d; ++k) {
        for (int x = 1; x < q; ++x)
            act[k][x - 1] = static_cast<int>(1LL * scale * x % q) - 1;
        scale = static_cast<int>(1LL * scale * omega % q);
    }
    return make_space(std::move(points), std::move(g), std::move(act));
}

}  // namespace dowlingkit::fixtures
