#include "dowlingkit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>

namespace dowlingkit {

RankedPoset::RankedPoset(int n_elements, std::vector<std::pair<int, int>> covers,
                         std::vector<int> rank, std::vector<std::string> labels)
    : n_(n_elements), covers_(std::move(covers)), rank_(std::move(rank)),
      labels_(std::move(labels)) {
    if (n_ < 0) throw error("poset: negative element count");
    if (static_cast<std::size_t>(n_) > kPosetClosureCap)
        throw resource_error("poset: too many elements to materialize the order relation",
                             kPosetClosureCap);
    if (static_cast<int>(rank_.size()) != n_) throw error("poset: rank vector size mismatch");
    if (labels_.empty()) labels_.resize(n_);
    if (static_cast<int>(labels_.size()) != n_) throw error("poset: label vector size mismatch");
    for (int r : rank_)
        if (r < 0) throw error("poset: ranks must be nonnegative");
    for (auto [lo, hi] : covers_) {
        if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_) throw error("poset: cover index out of range");
        if (lo == hi) throw error("poset: reflexive cover");
        if (rank_[hi] != rank_[lo] + 1)
            throw error("poset: cover must raise rank by exactly one");
    }
    max_rank_ = 0;
    for (int r : rank_) max_rank_ = std::max(max_rank_, r);

    // Down-sets, filled in rank order (covers only point upward in rank, so
    // this is a topological order).
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    down_.assign(static_cast<std::size_t>(n_) * words_, 0);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank_[a] < rank_[b]; });

    std::vector<std::vector<int>> lower(n_);
    for (auto [lo, hi] : covers_) lower[hi].push_back(lo);
    for (int x : order) {
        auto* row = &down_[static_cast<std::size_t>(x) * words_];
        row[x >> 6] |= std::uint64_t(1) << (x & 63);
        for (int lo : lower[x]) {
            const auto* src = &down_[static_cast<std::size_t>(lo) * words_];
            for (std::size_t w = 0; w < words_; ++w) row[w] |= src[w];
        }
    }

    // Unique bottom: an element lying below everything.
    bottom_ = -1;
    int n_minimal = 0;
    for (int x = 0; x < n_; ++x) {
        bool minimal = true;
        const auto* row = &down_[static_cast<std::size_t>(x) * words_];
        for (std::size_t w = 0; w < words_ && minimal; ++w) {
            std::uint64_t bits = row[w];
            if (w == static_cast<std::size_t>(x >> 6)) bits &= ~(std::uint64_t(1) << (x & 63));
            minimal = bits == 0;
        }
        if (minimal) {
            ++n_minimal;
            bottom_ = x;
        }
    }
    if (n_minimal != 1) {
        bottom_ = -1;
    } else if (n_ > 0) {
        for (int x = 0; x < n_; ++x)
            if (!leq(bottom_, x)) {
                bottom_ = -1;  // minimal but not a minimum
                break;
            }
    }
    if (bottom_ >= 0 && rank_[bottom_] != 0) bottom_ = -1;
}

std::vector<int> RankedPoset::downset_of(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq(y, x)) out.push_back(y);
    return out;
}

std::vector<int> RankedPoset::elements_of_rank(int r) const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (rank_[x] == r) out.push_back(x);
    return out;
}

std::vector<int> RankedPoset::lower_covers_of(int x) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_)
        if (hi == x) out.push_back(lo);
    return out;
}

std::vector<int> RankedPoset::upper_covers_of(int x) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_)
        if (lo == x) out.push_back(hi);
    return out;
}

MobiusTable mobius_table(const RankedPoset& p) {
    if (p.bottom() < 0) throw error("mobius_table: poset has no unique bottom element");
    MobiusTable t;
    t.mu.assign(p.size(), 0);
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.rank(a) < p.rank(b); });
    for (int x : order) {
        if (x == p.bottom()) {
            t.mu[x] = 1;
            continue;
        }
        long long s = 0;
        for (int y = 0; y < p.size(); ++y)
            if (y != x && p.leq(y, x)) s += t.mu[y];
        t.mu[x] = -s;
    }
    return t;
}

IntPolynomial char_poly_bruteforce(const RankedPoset& p, const MobiusTable& mob,
                                   int ambient_rank) {
    if (ambient_rank < p.max_rank())
        throw error("char_poly_bruteforce: ambient rank below the poset's max rank");
    std::vector<BigInt> coeffs(ambient_rank + 1, BigInt(0));
    for (int x = 0; x < p.size(); ++x) coeffs[ambient_rank - p.rank(x)] += mob.mu[x];
    return IntPolynomial(std::move(coeffs), "t");
}

IntPolynomial char_poly_bruteforce(const RankedPoset& p, int ambient_rank) {
    return char_poly_bruteforce(p, mobius_table(p), ambient_rank);
}

std::vector<long long> whitney_ranks(const RankedPoset& p, const MobiusTable& mob) {
    std::vector<long long> w(p.max_rank() + 1, 0);
    for (int x = 0; x < p.size(); ++x) w[p.rank(x)] += std::llabs(mob.mu[x]);
    return w;
}

std::vector<long long> whitney_ranks(const RankedPoset& p) {
    return whitney_ranks(p, mobius_table(p));
}

RankedPoset interval(const RankedPoset& p, int a, int b) {
    if (a < 0 || a >= p.size() || b < 0 || b >= p.size())
        throw error("interval: element index out of range");
    if (!p.leq(a, b)) throw error("interval: endpoints are not comparable");

    std::vector<int> members;
    std::vector<int> pos(p.size(), -1);
    for (int x = 0; x < p.size(); ++x) {
        if (p.leq(a, x) && p.leq(x, b)) {
            pos[x] = static_cast<int>(members.size());
            members.push_back(x);
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (auto [lo, hi] : p.covers())
        if (pos[lo] >= 0 && pos[hi] >= 0) covers.emplace_back(pos[lo], pos[hi]);
    std::vector<int> rank(members.size());
    std::vector<std::string> labels(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        rank[i] = p.rank(members[i]) - p.rank(a);
        labels[i] = p.label(members[i]);
    }
    return RankedPoset(static_cast<int>(members.size()), std::move(covers), std::move(rank),
                       std::move(labels));
}

BigInt poset_motive_eval(const RankedPoset& p, int ambient_rank, const BigInt& x) {
    return char_poly_bruteforce(p, ambient_rank).eval(x);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

void write_dot(std::ostream& os, const RankedPoset& p, const std::string& graph_name) {
    os << "digraph " << graph_name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int x = 0; x < p.size(); ++x) {
        std::string label = p.label(x).empty() ? std::to_string(x) : p.label(x);
        os << "  n" << x << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
}

nlohmann::json poset_to_json(const RankedPoset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
    std::vector<int> rank(p.size());
    for (int x = 0; x < p.size(); ++x) rank[x] = p.rank(x);
    return nlohmann::json{
        {"elements", p.labels()}, {"covers", covers}, {"rank", rank}};
}

}  // namespace dowlingkit
