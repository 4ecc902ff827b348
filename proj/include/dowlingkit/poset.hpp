#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dowlingkit/common.hpp"
#include "dowlingkit/polynomial.hpp"

namespace dowlingkit {

/// Refuse to materialize the order relation past this many elements.
inline constexpr std::size_t kPosetClosureCap = 100000;

/// A finite ranked poset given by its cover relations. The order relation is
/// materialized as per-element down-sets (bit rows over cover reachability) at
/// construction, so leq queries are O(1). Immutable once built.
///
/// Invariants checked at construction: covers are irreflexive with
/// rank(upper) = rank(lower) + 1 (which forces acyclicity), and the element
/// count stays under kPosetClosureCap.
class RankedPoset {
public:
    RankedPoset() = default;
    RankedPoset(int n_elements, std::vector<std::pair<int, int>> covers, std::vector<int> rank,
                std::vector<std::string> labels = {});

    int size() const { return n_; }
    int rank(int x) const { return rank_[x]; }
    int max_rank() const { return max_rank_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }

    /// Index of the unique minimum, or -1 if there is none.
    int bottom() const { return bottom_; }

    bool leq(int a, int b) const { return down_word(b, a >> 6) >> (a & 63) & 1; }
    std::vector<int> downset_of(int x) const;
    std::vector<int> elements_of_rank(int r) const;
    std::vector<int> lower_covers_of(int x) const;
    std::vector<int> upper_covers_of(int x) const;

private:
    std::uint64_t down_word(int x, int w) const {
        return down_[static_cast<std::size_t>(x) * words_ + w];
    }

    int n_ = 0;
    int max_rank_ = 0;
    int bottom_ = -1;
    std::size_t words_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> rank_;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> down_;  // n_ rows of words_ words; row x = {y : y <= x}
};

/// Exact Möbius values mu(0̂, x) for every x, computed by the defining
/// recursion over the materialized order relation. Requires a unique bottom
/// (structure error otherwise).
struct MobiusTable {
    std::vector<long long> mu;
};

MobiusTable mobius_table(const RankedPoset& p);

/// Sum of mu(0̂,x) * t^(ambient_rank - rank(x)); ambient_rank must cover the
/// poset's max rank.
IntPolynomial char_poly_bruteforce(const RankedPoset& p, int ambient_rank);
IntPolynomial char_poly_bruteforce(const RankedPoset& p, const MobiusTable& mob, int ambient_rank);

/// Per-rank sums of |mu(0̂,x)|: the Whitney homology dimensions when every
/// lower interval is a geometric lattice. That precondition is guaranteed for
/// the posets this library builds and is not verified here; for arbitrary
/// user posets the value has no homological meaning.
std::vector<long long> whitney_ranks(const RankedPoset& p);
std::vector<long long> whitney_ranks(const RankedPoset& p, const MobiusTable& mob);

/// Induced subposet on {x : a <= x <= b}, reranked so a has rank 0.
RankedPoset interval(const RankedPoset& p, int a, int b);

/// chi(p, x) with ambient rank, i.e. char_poly_bruteforce evaluated at x.
BigInt poset_motive_eval(const RankedPoset& p, int ambient_rank, const BigInt& x);

void write_dot(std::ostream& os, const RankedPoset& p, const std::string& graph_name = "hasse");
nlohmann::json poset_to_json(const RankedPoset& p);

}  // namespace dowlingkit
