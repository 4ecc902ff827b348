#pragma once

#include <vector>

#include "dowlingkit/polynomial.hpp"
#include "dowlingkit/wreath.hpp"

namespace dowlingkit {

/// prod_{i=0}^{n-1} (t - |S| - |G| i) for nonempty S, and the free-action
/// analogue prod_{i=1}^{n-1} (t - |G| i) for size_s = 0, expanded exactly.
IntPolynomial char_poly_factored(int n, int size_g, int size_s);

/// Whitney homology Hilbert series prod_{i=0}^{n-1} (1 + (|S| + |G| i) t).
/// Stated only for nonempty S; size_s = 0 is an unsupported-case error (the
/// enumerated-poset route is the only source there).
IntPolynomial whitney_hilbert(int n, int size_g, int size_s);

/// dim H_{n-2}(D_n(G)) = prod_{j=1}^{n-1} (1 + j |G|).
BigInt dowling_homology_dim(int n, int size_g);

/// One induced summand of the Whitney homology decomposition at rank r.
struct RepSummand {
    LabeledPartition label;
    BigInt stabilizer_order;
    BigInt inner_dim;
    BigInt induced_dim;
};

/// All summands for WH_r: one per O(S)-labeled partition with n - r unlabeled
/// parts. The induced dimensions must sum to the degree-r coefficient of
/// whitney_hilbert.
std::vector<RepSummand> rep_decomposition(const DowlingContext& ctx, int r);

/// prod_{i=0}^{n-1} (P(u) + (|S| + |G| i) t), the E_1-page Hilbert series;
/// P is the compactly supported Poincaré polynomial of X. Requires size_s >= 1.
BivariatePoly e1_hilbert(const IntPolynomial& p_of_u, int n, int size_g, int size_s);

/// prod_{i=0}^{n-1} (x - |S| - |G| i); with size_s = 0 this is the free-action
/// product prod (x - |G| i). Integer x gives point counts and Euler
/// characteristics; a polynomial x gives the motive class formally.
BigInt motive_eval(const BigInt& x, int n, int size_g, int size_s);
IntPolynomial motive_eval(const IntPolynomial& x, int n, int size_g, int size_s);

/// n! |G|^n binom((xc - |S|)/|G|, n) with the binomial taken as a falling
/// factorial over the rationals; always integral and equal to motive_eval.
BigInt euler_binomial_form(const BigInt& xc, int n, int size_g, int size_s);

}  // namespace dowlingkit
