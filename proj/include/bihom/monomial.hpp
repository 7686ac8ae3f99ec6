#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

/// (weighted degree d, length l); deg x_k = k, len x_k = 1.
struct Bidegree {
    std::int64_t d = 0;
    std::int64_t l = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.d + b.d, a.l + b.l}; }
    friend bool operator==(Bidegree, Bidegree) = default;
};

inline std::ostream& operator<<(std::ostream& os, Bidegree b)
{
    return os << "(" << b.d << "," << b.l << ")";
}

/// Monomial x_1^{a_1} x_2^{a_2} ... stored as (variable, exponent) pairs with
/// strictly increasing variable index and exponents >= 1. The empty monomial
/// is the constant 1.
///
/// Ordering: a monomial x_lambda = prod x_{lambda_i} is identified with the
/// partition lambda (its variable indices repeated by multiplicity, largest
/// first); monomials compare by lexicographic order on those partitions.
class Monomial {
public:
    using Variable = std::uint32_t;
    using Exponent = std::uint32_t;
    using Entry = std::pair<Variable, Exponent>;

    Monomial() = default;

    /// Entries may come in any order; repeated variables accumulate and zero
    /// exponents are dropped.
    explicit Monomial(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end());
        for (auto [var, exp] : entries) {
            if (var == 0)
                throw std::invalid_argument("Monomial: variable indices start at 1");
            if (exp == 0)
                continue;
            if (!entries_.empty() && entries_.back().first == var)
                entries_.back().second += exp;
            else
                entries_.emplace_back(var, exp);
        }
    }

    Monomial(std::initializer_list<Entry> entries) : Monomial(std::vector<Entry>(entries)) {}

    static Monomial variable(Variable k, Exponent e = 1) { return Monomial({{k, e}}); }

    /// x_lambda for a sequence of parts (order irrelevant).
    static Monomial from_parts(const std::vector<std::uint32_t>& parts)
    {
        std::vector<Entry> entries;
        entries.reserve(parts.size());
        for (auto p : parts)
            entries.emplace_back(p, 1);
        return Monomial(std::move(entries));
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_one() const noexcept { return entries_.empty(); }

    Exponent exponent(Variable k) const noexcept
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{k, 0});
        return (it != entries_.end() && it->first == k) ? it->second : 0;
    }

    Bidegree bidegree() const noexcept
    {
        Bidegree b;
        for (auto [var, exp] : entries_) {
            b.d += std::int64_t(var) * exp;
            b.l += exp;
        }
        return b;
    }

    /// Parts of the associated partition, weakly decreasing.
    std::vector<std::uint32_t> parts() const
    {
        std::vector<std::uint32_t> out;
        for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
            out.insert(out.end(), it->second, it->first);
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
                out.entries_.push_back(*i++);
            else if (i == a.entries_.end() || j->first < i->first)
                out.entries_.push_back(*j++);
            else {
                out.entries_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Removes `count` copies of x_k. Requires exponent(k) >= count.
    Monomial divided_by(Variable k, Exponent count = 1) const
    {
        Monomial out = *this;
        auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), Entry{k, 0});
        if (it == out.entries_.end() || it->first != k || it->second < count)
            throw std::invalid_argument("Monomial::divided_by: exponent too small");
        it->second -= count;
        if (it->second == 0)
            out.entries_.erase(it);
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept
    {
        auto i = a.entries_.rbegin(), j = b.entries_.rbegin();
        for (; i != a.entries_.rend() && j != b.entries_.rend(); ++i, ++j) {
            if (i->first != j->first)
                return i->first <=> j->first;
            // The side with more copies of the shared largest part stays larger
            // one position longer.
            if (i->second != j->second)
                return i->second <=> j->second;
        }
        if (i == a.entries_.rend() && j == b.entries_.rend())
            return std::strong_ordering::equal;
        return i == a.entries_.rend() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// "x1*x3^2"; "1" for the empty monomial.
    std::string str() const
    {
        if (entries_.empty())
            return "1";
        std::string s;
        for (auto [var, exp] : entries_) {
            if (!s.empty())
                s += '*';
            s += 'x' + std::to_string(var);
            if (exp > 1)
                s += '^' + std::to_string(exp);
        }
        return s;
    }

private:
    std::vector<Entry> entries_;
};

inline Bidegree bidegree(const Monomial& m) noexcept { return m.bidegree(); }

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

} // namespace bihom
