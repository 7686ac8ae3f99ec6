#pragma once

// Exact polynomials in x_1, x_2, ... with rational coefficients.

#include "monomial.hpp"
#include "partitions.hpp"
#include "rational.hpp"

#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

/// n! for small n, memoized up to the largest n requested so far.
inline const Integer& factorial(std::uint32_t n)
{
    static std::shared_mutex mutex;
    // deque: growth never invalidates references already handed out
    static std::deque<Integer> table{Integer(1)};
    {
        std::shared_lock lock(mutex);
        if (n < table.size())
            return table[n];
    }
    std::unique_lock lock(mutex);
    while (table.size() <= n)
        table.push_back(table.back() * Integer(table.size()));
    return table[n];
}

class Polynomial {
public:
    // Descending partition order: x1*x3 precedes x2^2 in F(4,2).
    using TermMap = std::map<Monomial, Rational, std::greater<>>;

    /// Accumulates terms, then freezes into an immutable Polynomial.
    class Builder {
    public:
        void add(const Monomial& m, const Rational& c)
        {
            if (c == 0)
                return;
            auto [it, inserted] = terms_.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }
        void add(const Polynomial& p, const Rational& scale = Rational(1))
        {
            if (scale == 0)
                return;
            for (const auto& [m, c] : p.terms())
                add(m, c * scale);
        }
        Polynomial build() && { return Polynomial(std::move(terms_)); }

    private:
        TermMap terms_;
    };

    Polynomial() = default;
    Polynomial(const Monomial& m, Rational c = Rational(1))
    {
        if (c != 0)
            terms_.emplace(m, std::move(c));
    }
    static Polynomial constant(const Rational& c) { return Polynomial(Monomial{}, c); }
    static Polynomial variable(Monomial::Variable k) { return Polynomial(Monomial::variable(k)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// The common bidegree of all terms, or nullopt for zero / mixed input.
    std::optional<Bidegree> homogeneous_bidegree() const
    {
        if (terms_.empty())
            return std::nullopt;
        Bidegree b = terms_.begin()->first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != b)
                return std::nullopt;
        return b;
    }

    bool is_homogeneous(Bidegree b) const
    {
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != b)
                return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        Builder out;
        out.add(a);
        out.add(b);
        return std::move(out).build();
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        Builder out;
        out.add(a);
        out.add(b, Rational(-1));
        return std::move(out).build();
    }
    friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Rational& c)
    {
        if (c == 0)
            return {};
        TermMap terms = a.terms_;
        for (auto& [m, coeff] : terms)
            coeff *= c;
        return Polynomial(std::move(terms));
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Builder out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add(ma * mb, ca * cb);
        return std::move(out).build();
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "x1*x3 + 1/2*x2^2", "0" for the zero polynomial.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            if (m.is_one())
                s += to_short_string(mag);
            else if (mag == 1)
                s += m.str();
            else
                s += to_short_string(mag) + "*" + m.str();
        }
        return s;
    }

private:
    explicit Polynomial(TermMap terms) : terms_(std::move(terms)) {}

    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }
inline Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

/// d/dx_k.
inline Polynomial partial_derivative(const Polynomial& f, Monomial::Variable k)
{
    if (k == 0)
        throw std::invalid_argument("partial_derivative: variable indices start at 1");
    Polynomial::Builder out;
    for (const auto& [m, c] : f.terms()) {
        auto e = m.exponent(k);
        if (e > 0)
            out.add(m.divided_by(k), c * Rational(e));
    }
    return std::move(out).build();
}

/// <mu, mu> = prod_k a_k! for a monomial with exponents a_k.
inline Integer monomial_norm_squared(const Monomial& m)
{
    Integer n(1);
    for (auto [var, exp] : m.entries())
        n *= factorial(exp);
    return n;
}

/// Bilinear extension of <mu, nu> = delta_{mu,nu} prod_k a_k!.
inline Rational inner_product(const Polynomial& f, const Polynomial& g)
{
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    Rational sum(0);
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it != large.terms().end())
            sum += c * it->second * Rational(monomial_norm_squared(m));
    }
    return sum;
}

/// Monomials of bidegree (d, l), ordered by decreasing partition.
inline std::vector<Monomial> monomial_basis(std::int64_t d, std::int64_t l)
{
    std::vector<Monomial> out;
    for (const auto& lambda : partitions_with_length(d, l))
        out.push_back(Monomial::from_parts(lambda.parts()));
    return out;
}

/// sum_k k x_k d/dx_k: scales each monomial by its degree.
inline Polynomial apply_degree_operator(const Polynomial& f)
{
    Polynomial::Builder out;
    for (const auto& [m, c] : f.terms())
        out.add(m, c * Rational(m.bidegree().d));
    return std::move(out).build();
}

/// sum_k x_k d/dx_k: scales each monomial by its length.
inline Polynomial apply_length_operator(const Polynomial& f)
{
    Polynomial::Builder out;
    for (const auto& [m, c] : f.terms())
        out.add(m, c * Rational(m.bidegree().l));
    return std::move(out).build();
}

} // namespace bihom
