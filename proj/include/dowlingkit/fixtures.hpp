#pragma once

#include <string>
#include <vector>

#include "dowlingkit/group.hpp"
#include "dowlingkit/layers.hpp"

namespace dowlingkit::fixtures {

/// "Z1".."Z12" (cyclic groups).
FiniteGroup group_by_name(const std::string& name);

/// Named actions for a given group:
///   empty      : S = ∅
///   trivial<k> : trivial action on k points ("trivial1" uses {"0"},
///                "trivial2" uses {"1","-1"}, larger sets use s1..sk)
///   signflip   : Z2 swapping {"1","-1"}
///   hexagonal  : Z6 on {e,z1,z2,z3,w1,w2}, generator (e)(z1 z2 z3)(w1 w2)
///   square     : Z4 on {e,z1,z2,t}, generator (e)(z1 z2)(t)
///   regular    : G acting on itself by left translation
GSetAction action_by_name(const FiniteGroup& g, const std::string& name);
std::vector<std::string> action_names_for(const FiniteGroup& g);

/// The affine line over F_q (q prime) with mu_d acting by scalar
/// multiplication; requires d | q-1. Singular set = {0}.
FiniteGSpace affine_mu_d(int q, int d);

/// The multiplicative group F_q^x with Z2 acting by inversion.
/// Singular set = {1, q-1}.
FiniteGSpace multiplicative_inversion(int q);

/// The multiplicative group F_q^x with mu_d acting by translation
/// (multiplication); free, singular set empty. Requires d | q-1.
FiniteGSpace multiplicative_translation(int q, int d);

}  // namespace dowlingkit::fixtures
