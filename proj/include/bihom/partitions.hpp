#pragma once

// Partitions, Young diagrams and the diagonal-hook statistics.
//
// Conventions for a diagram with k diagonal boxes, diagonal box i (1-based):
//   hook number  d_i = boxes to the right in row i + boxes below in column i + 1
//   leg number   q_i = boxes in column i at or below row i, diagonal box INCLUDED
//   increment    l_i = q_i - q_{i+1}, q_{k+1} = 0
// The leg number deliberately counts the diagonal box; the usual textbook leg
// length is q_i - 1.

#include "monomial.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Order on index pairs: (d1,l1) > (d2,l2) iff d1 > d2, or d1 == d2 and l1 < l2.
inline std::strong_ordering index_order(Bidegree a, Bidegree b) noexcept
{
    if (a.d != b.d)
        return a.d <=> b.d;
    return b.l <=> a.l;
}

inline bool index_succeeds(Bidegree a, Bidegree b) noexcept { return index_order(a, b) > 0; }

/// Lexicographic extension of index_order to sequences.
inline std::strong_ordering sequence_order(const std::vector<Bidegree>& a,
                                           const std::vector<Bidegree>& b) noexcept
{
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (auto c = index_order(a[i], b[i]); c != 0)
            return c;
    return a.size() <=> b.size();
}

/// A sequence (d_1,l_1),...,(d_k,l_k) of hook numbers and leg increments.
using IndexSequence = std::vector<Bidegree>;

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }
    std::int64_t length() const noexcept { return std::int64_t(parts_.size()); }

    std::vector<std::uint32_t> conjugate() const
    {
        std::vector<std::uint32_t> cols(parts_.empty() ? 0 : parts_.front(), 0);
        for (auto p : parts_)
            for (std::uint32_t c = 0; c < p; ++c)
                ++cols[c];
        return cols;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

struct HookLegEntry {
    std::int64_t hook = 0;      // d_i
    std::int64_t leg = 0;       // q_i, diagonal box included
    std::int64_t increment = 0; // l_i

    friend bool operator==(const HookLegEntry&, const HookLegEntry&) = default;
};

struct HookLegProfile {
    std::vector<HookLegEntry> entries;

    /// The (d_i, l_i) sequence that indexes basis elements.
    IndexSequence index_sequence() const
    {
        IndexSequence out;
        out.reserve(entries.size());
        for (const auto& e : entries)
            out.push_back({e.hook, e.increment});
        return out;
    }

    friend bool operator==(const HookLegProfile&, const HookLegProfile&) = default;
};

/// All partitions of d into exactly l parts, decreasing lexicographic order.
inline std::vector<Partition> partitions_with_length(std::int64_t d, std::int64_t l)
{
    std::vector<Partition> out;
    if (d < 0 || l < 0 || l > d || (l == 0 && d > 0))
        return out;
    if (l == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> current;
    current.reserve(std::size_t(l));
    // Fill `slots` more parts summing to `rest`, each at most `cap`.
    auto fill = [&](auto&& self, std::int64_t rest, std::int64_t slots, std::int64_t cap) -> void {
        if (slots == 0) {
            if (rest == 0)
                out.emplace_back(current);
            return;
        }
        std::int64_t hi = std::min(cap, rest - (slots - 1));
        std::int64_t lo = (rest + slots - 1) / slots;
        for (std::int64_t part = hi; part >= lo; --part) {
            current.push_back(std::uint32_t(part));
            self(self, rest - part, slots - 1, part);
            current.pop_back();
        }
    };
    fill(fill, d, l, d);
    return out;
}

/// p(d, l) via p(d,l) = p(d-1,l-1) + p(d-l,l).
inline std::uint64_t count_partitions(std::int64_t d, std::int64_t l)
{
    if (d < 0 || l < 0 || l > d)
        return 0;
    if (l == 0)
        return d == 0 ? 1 : 0;
    std::vector<std::vector<std::uint64_t>> p(std::size_t(d + 1), std::vector<std::uint64_t>(std::size_t(l + 1), 0));
    p[0][0] = 1;
    for (std::int64_t n = 1; n <= d; ++n)
        for (std::int64_t k = 1; k <= std::min(n, l); ++k)
            p[n][k] = p[n - 1][k - 1] + p[n - k][k];
    return p[d][l];
}

inline HookLegProfile hook_leg_profile(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("hook_leg_profile: empty partition");
    const auto& rows = lambda.parts();
    const auto cols = lambda.conjugate();
    std::int64_t k = 0;
    while (k < std::int64_t(rows.size()) && rows[k] >= std::uint32_t(k + 1))
        ++k;

    HookLegProfile profile;
    profile.entries.resize(std::size_t(k));
    for (std::int64_t i = 0; i < k; ++i) {
        // 0-based i: arm = rows[i]-i-1, leg below = cols[i]-i-1.
        profile.entries[i].hook = std::int64_t(rows[i]) + std::int64_t(cols[i]) - 2 * i - 1;
        profile.entries[i].leg = std::int64_t(cols[i]) - i;
    }
    for (std::int64_t i = 0; i < k; ++i) {
        std::int64_t next = i + 1 < k ? profile.entries[i + 1].leg : 0;
        profile.entries[i].increment = profile.entries[i].leg - next;
    }
    return profile;
}

/// l_i >= 1; d_i > d_{i+1} + l_i for i < k; d_k >= l_k. Empty is not admissible.
inline bool is_admissible(const IndexSequence& seq) noexcept
{
    if (seq.empty())
        return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].l < 1)
            return false;
        if (i + 1 < seq.size() && !(seq[i].d > seq[i + 1].d + seq[i].l))
            return false;
    }
    return seq.back().d >= seq.back().l;
}

/// Inverse of hook_leg_profile restricted to (d_i, l_i).
inline Partition profile_to_partition(const IndexSequence& seq)
{
    if (!is_admissible(seq))
        throw std::invalid_argument("profile_to_partition: sequence is not admissible");
    const std::int64_t k = std::int64_t(seq.size());
    std::vector<std::int64_t> leg(static_cast<std::size_t>(k + 1), 0);
    for (std::int64_t i = k - 1; i >= 0; --i)
        leg[i] = leg[i + 1] + seq[i].l;

    // 0-based: column length c_i = q_i + i, row length r_i = d_i - q_i + i + 1.
    std::vector<std::int64_t> col(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
        col[i] = leg[i] + i;

    std::vector<std::uint32_t> parts;
    for (std::int64_t i = 0; i < k; ++i)
        parts.push_back(std::uint32_t(seq[i].d - leg[i] + i + 1));
    for (std::int64_t row = k; row < leg[0]; ++row) {
        std::uint32_t width = 0;
        for (std::int64_t j = 0; j < k; ++j)
            if (col[j] > row)
                ++width;
        parts.push_back(width);
    }
    return Partition(std::move(parts));
}

/// All admissible sequences with sum d_i = d and sum l_i = l, in decreasing
/// lexicographic order under index_order.
inline std::vector<IndexSequence> admissible_sequences(std::int64_t d, std::int64_t l)
{
    std::vector<IndexSequence> out;
    if (l < 1 || d < l)
        return out;
    IndexSequence current;
    // Next pair must satisfy d_next < bound.
    auto extend = [&](auto&& self, std::int64_t rest_d, std::int64_t rest_l, std::int64_t bound) -> void {
        if (rest_d == 0 && rest_l == 0) {
            out.push_back(current);
            return;
        }
        if (rest_l == 0 || rest_d < rest_l)
            return;
        for (std::int64_t di = std::min(rest_d, bound - 1); di >= 1; --di) {
            for (std::int64_t li = 1; li <= std::min(di, rest_l); ++li) {
                std::int64_t tail_d = rest_d - di, tail_l = rest_l - li;
                if ((tail_d == 0) != (tail_l == 0))
                    continue;
                current.push_back({di, li});
                self(self, tail_d, tail_l, di - li);
                current.pop_back();
            }
        }
    };
    extend(extend, d, l, d + 1);
    return out;
}

} // namespace bihom
