#include "dowlingkit/invariants.hpp"

namespace dowlingkit {

IntPolynomial char_poly_factored(int n, int size_g, int size_s) {
    if (n < 1) throw error("char_poly_factored: n must be positive");
    if (size_g < 1 || size_s < 0) throw error("char_poly_factored: bad sizes");
    IntPolynomial t = IntPolynomial::variable("t");
    IntPolynomial out(BigInt(1), "t");
    if (size_s > 0) {
        for (int i = 0; i < n; ++i) out *= t - IntPolynomial(BigInt(size_s + size_g * i), "t");
    } else {
        for (int i = 1; i < n; ++i) out *= t - IntPolynomial(BigInt(size_g * i), "t");
    }
    return out;
}

IntPolynomial whitney_hilbert(int n, int size_g, int size_s) {
    if (n < 1) throw error("whitney_hilbert: n must be positive");
    if (size_s < 1)
        throw error("whitney_hilbert: unsupported for empty S (use whitney_ranks on the "
                    "enumerated poset)");
    IntPolynomial t = IntPolynomial::variable("t");
    IntPolynomial out(BigInt(1), "t");
    for (int i = 0; i < n; ++i)
        out *= IntPolynomial(BigInt(1), "t") + IntPolynomial(BigInt(size_s + size_g * i), "t") * t;
    return out;
}

BigInt dowling_homology_dim(int n, int size_g) {
    if (n < 1) throw error("dowling_homology_dim: n must be positive");
    BigInt out = 1;
    for (int j = 1; j <= n - 1; ++j) out *= 1 + BigInt(j) * size_g;
    return out;
}

std::vector<RepSummand> rep_decomposition(const DowlingContext& ctx, int r) {
    const int n = ctx.n;
    if (r < 0 || r > n) throw error("rep_decomposition: rank out of range");
    const BigInt group_order = ctx.group().order();
    const BigInt wreath_order = factorial(n) * int_pow(group_order, n);

    std::vector<RepSummand> out;
    for (const auto& lp : labeled_partitions(n, ctx.orbits.n_orbits(), {})) {
        if (lp.rank(n) != r) continue;
        // multiplicities a_i of unlabeled part sizes
        std::vector<int> mult(n + 1, 0);
        for (int part : lp.unlabeled) ++mult[part];

        RepSummand s;
        s.label = lp;
        s.stabilizer_order = 1;
        s.inner_dim = 1;
        for (int i = 1; i <= n; ++i) {
            if (mult[i] == 0) continue;
            s.stabilizer_order *=
                factorial(mult[i]) * int_pow(factorial(i) * group_order, mult[i]);
            s.inner_dim *= int_pow(factorial(i - 1), mult[i]);
        }
        for (int o = 0; o < ctx.orbits.n_orbits(); ++o) {
            const int m = lp.labeled[o];
            if (m == 0) continue;
            const int point_stab = static_cast<int>(ctx.orbits.stabilizer[o].size());
            s.stabilizer_order *= factorial(m) * int_pow(BigInt(point_stab), m);
            s.inner_dim *= dowling_homology_dim(m, point_stab);
        }
        BigInt idx = wreath_order / s.stabilizer_order;
        if (idx * s.stabilizer_order != wreath_order)
            throw error("rep_decomposition: stabilizer order does not divide the wreath order");
        s.induced_dim = idx * s.inner_dim;
        out.push_back(std::move(s));
    }
    return out;
}

BivariatePoly e1_hilbert(const IntPolynomial& p_of_u, int n, int size_g, int size_s) {
    if (n < 1) throw error("e1_hilbert: n must be positive");
    if (size_s < 1) throw error("e1_hilbert: stated only for nonempty S");
    BivariatePoly out = BivariatePoly::one();
    for (int i = 0; i < n; ++i) out.mul_linear(p_of_u, BigInt(size_s + size_g * i));
    return out;
}

BigInt motive_eval(const BigInt& x, int n, int size_g, int size_s) {
    if (n < 1) throw error("motive_eval: n must be positive");
    BigInt out = 1;
    for (int i = 0; i < n; ++i) out *= x - size_s - BigInt(size_g) * i;
    return out;
}

IntPolynomial motive_eval(const IntPolynomial& x, int n, int size_g, int size_s) {
    if (n < 1) throw error("motive_eval: n must be positive");
    IntPolynomial out(BigInt(1), x.var());
    for (int i = 0; i < n; ++i)
        out *= x - IntPolynomial(BigInt(size_s) + BigInt(size_g) * i, x.var());
    return out;
}

BigInt euler_binomial_form(const BigInt& xc, int n, int size_g, int size_s) {
    if (n < 1) throw error("euler_binomial_form: n must be positive");
    const BigRational y(xc - size_s, size_g);
    BigRational binom = 1;
    for (int k = 0; k < n; ++k) binom *= y - k;
    binom /= BigRational(factorial(n));
    BigRational result = BigRational(factorial(n) * int_pow(BigInt(size_g), n)) * binom;
    if (boost::multiprecision::denominator(result) != 1)
        throw error("euler_binomial_form: unexpected non-integral value");
    return boost::multiprecision::numerator(result);
}

}  // namespace dowlingkit
