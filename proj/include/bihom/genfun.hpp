#pragma once

// The bihomogeneous functions g(d, l): coefficients of r^l z^d in
// exp(r * sum_j x_j z^j). Products of them, the h_k / e_k decompositions, and
// coordinates in the Young-diagram-indexed basis S(d, l).

#include "exact_matrix.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace bihom {

/// Index (d, l) of g(d, l).
using GIndex = Bidegree;

/// Single source of truth for which g(d, l) vanish: g(0,0) = 1, and g(d,l) is
/// nonzero exactly when d >= l >= 1.
inline bool g_is_nonzero(std::int64_t d, std::int64_t l) noexcept
{
    return (d == 0 && l == 0) || (l >= 1 && d >= l);
}

inline bool g_is_one(std::int64_t d, std::int64_t l) noexcept { return d == 0 && l == 0; }

/// Formal product g(d_1,l_1)...g(d_k,l_k) with factors sorted so that
/// (d_1,l_1) >= (d_2,l_2) >= ... under index_order. Unit factors g(0,0) are
/// dropped; the empty product is 1.
class GProduct {
public:
    GProduct() = default;

    explicit GProduct(std::vector<GIndex> factors)
    {
        for (auto f : factors) {
            if (g_is_one(f.d, f.l))
                continue;
            if (!g_is_nonzero(f.d, f.l))
                throw std::invalid_argument("GProduct: g(" + std::to_string(f.d) + "," + std::to_string(f.l) +
                                            ") is not a valid nonzero factor");
            factors_.push_back(f);
        }
        std::sort(factors_.begin(), factors_.end(),
                  [](GIndex a, GIndex b) { return index_order(a, b) > 0; });
    }

    GProduct(std::initializer_list<GIndex> factors) : GProduct(std::vector<GIndex>(factors)) {}

    const std::vector<GIndex>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }

    Bidegree bidegree() const noexcept
    {
        Bidegree b;
        for (auto f : factors_)
            b = b + f;
        return b;
    }

    /// "g(3,1)g(1,1)"; "1" for the empty product.
    std::string str() const
    {
        if (factors_.empty())
            return "1";
        std::string s;
        for (auto f : factors_)
            s += "g(" + std::to_string(f.d) + "," + std::to_string(f.l) + ")";
        return s;
    }

    friend bool operator==(const GProduct& a, const GProduct& b) { return a.factors_ == b.factors_; }
    friend std::strong_ordering operator<=>(const GProduct& a, const GProduct& b) noexcept
    {
        return sequence_order(a.factors_, b.factors_);
    }

private:
    std::vector<GIndex> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const GProduct& p) { return os << p.str(); }

/// Rational combination of GProducts; iterates greatest product first.
class GCombination {
public:
    using TermMap = std::map<GProduct, Rational, std::greater<>>;

    GCombination() = default;
    GCombination(const GProduct& p, Rational c = Rational(1)) { add(p, c); }

    void add(const GProduct& p, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const GProduct& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const GCombination&, const GCombination&) = default;

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            s += to_short_string(mag) + "*" + p.str();
        }
        return s;
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GCombination& c) { return os << c.str(); }

/// g(d, l) = sum over partitions lambda of d with l parts of
/// x_lambda / prod_i m_i(lambda)!, m_i the multiplicity of part i.
inline Polynomial g_poly(std::int64_t d, std::int64_t l)
{
    if (g_is_one(d, l))
        return Polynomial::constant(Rational(1));
    if (!g_is_nonzero(d, l))
        return {};
    Polynomial::Builder out;
    for (const auto& lambda : partitions_with_length(d, l)) {
        Monomial m = Monomial::from_parts(lambda.parts());
        out.add(m, Rational(Integer(1), monomial_norm_squared(m)));
    }
    return std::move(out).build();
}

inline Polynomial g_product_expand(const GProduct& p)
{
    Polynomial out = Polynomial::constant(Rational(1));
    for (auto f : p.factors())
        out = out * g_poly(f.d, f.l);
    return out;
}

inline Polynomial expand(const GCombination& combo)
{
    Polynomial::Builder out;
    for (const auto& [p, c] : combo.terms())
        out.add(g_product_expand(p), c);
    return std::move(out).build();
}

/// h_k = sum_{l <= k} g(k, l).
inline Polynomial complete_symmetric(std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("complete_symmetric: k must be >= 1");
    Polynomial::Builder out;
    for (std::int64_t l = 1; l <= k; ++l)
        out.add(g_poly(k, l));
    return std::move(out).build();
}

/// e_k = sum_{l <= k} (-1)^{k+l} g(k, l).
inline Polynomial elementary_symmetric(std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("elementary_symmetric: k must be >= 1");
    Polynomial::Builder out;
    for (std::int64_t l = 1; l <= k; ++l)
        out.add(g_poly(k, l), Rational((k + l) % 2 == 0 ? 1 : -1));
    return std::move(out).build();
}

/// S(d, l): products over admissible sequences, greatest first.
inline std::vector<GProduct> s_basis(std::int64_t d, std::int64_t l)
{
    std::vector<GProduct> out;
    for (auto& seq : admissible_sequences(d, l))
        out.emplace_back(std::move(seq));
    return out;
}

/// All products g(d_1,l_1)...g(d_k,l_k) of bidegree (d, l) with l_i >= 1 and
/// factors in non-increasing index_order; greatest product first. This is the
/// spanning set that S(d, l) is carved out of.
inline std::vector<GProduct> ordered_products(std::int64_t d, std::int64_t l)
{
    std::vector<GProduct> out;
    if (l < 1 || d < l)
        return out;
    std::vector<GIndex> current;
    // Next factor must not exceed `cap` under index_order.
    auto extend = [&](auto&& self, std::int64_t rest_d, std::int64_t rest_l, GIndex cap) -> void {
        if (rest_d == 0 && rest_l == 0) {
            out.emplace_back(current);
            return;
        }
        if (rest_l == 0 || rest_d < rest_l)
            return;
        for (std::int64_t di = std::min(rest_d, cap.d); di >= 1; --di) {
            for (std::int64_t li = 1; li <= std::min(di, rest_l); ++li) {
                if (index_order({di, li}, cap) > 0)
                    continue;
                current.push_back({di, li});
                self(self, rest_d - di, rest_l - li, GIndex{di, li});
                current.pop_back();
            }
        }
    };
    extend(extend, d, l, GIndex{d, 1});
    return out;
}

/// Monomial basis, S(d, l), and the change of basis between them.
struct GBasisData {
    Bidegree bidegree;
    std::vector<Monomial> monomials;
    std::vector<GProduct> basis;
    ExactMatrix expansion; // column j = monomial coordinates of basis[j]
    ExactMatrix inverse;   // monomial coordinates -> S(d, l) coordinates
};

inline std::vector<Rational> monomial_coordinates(const Polynomial& f, const std::vector<Monomial>& monomials)
{
    std::vector<Rational> v;
    v.reserve(monomials.size());
    for (const auto& m : monomials)
        v.push_back(f.coefficient(m));
    return v;
}

/// Uncached construction. Throws internal_error if S(d, l) fails to be a basis.
inline GBasisData build_gbasis_data(std::int64_t d, std::int64_t l)
{
    GBasisData data;
    data.bidegree = {d, l};
    data.monomials = monomial_basis(d, l);
    data.basis = s_basis(d, l);
    if (data.basis.size() != data.monomials.size())
        throw internal_error("S(" + std::to_string(d) + "," + std::to_string(l) + ") has " +
                             std::to_string(data.basis.size()) + " elements but the space has dimension " +
                             std::to_string(data.monomials.size()));
    const std::size_t n = data.basis.size();
    data.expansion = ExactMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        data.expansion.set_column(j, monomial_coordinates(g_product_expand(data.basis[j]), data.monomials));
    auto inv = inverse(data.expansion);
    if (!inv)
        throw internal_error("S(" + std::to_string(d) + "," + std::to_string(l) + ") is linearly dependent");
    data.inverse = std::move(*inv);
    return data;
}

/// Cached per (d, l); safe for concurrent callers.
inline std::shared_ptr<const GBasisData> gbasis_data(std::int64_t d, std::int64_t l)
{
    static std::shared_mutex mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const GBasisData>> cache;
    const auto key = std::make_pair(d, l);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const GBasisData>(build_gbasis_data(d, l));
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(built)).first->second;
}

/// Coordinates of f in S(d, l), in s_basis order.
inline std::vector<Rational> expand_in_gbasis(const Polynomial& f, std::int64_t d, std::int64_t l)
{
    if (!f.is_homogeneous({d, l}))
        throw std::invalid_argument("expand_in_gbasis: input is not homogeneous of bidegree (" +
                                    std::to_string(d) + "," + std::to_string(l) + ")");
    if (l < 1 || d < l) {
        if (!f.is_zero())
            throw std::invalid_argument("expand_in_gbasis: F(d,l) is trivial");
        return {};
    }
    auto data = gbasis_data(d, l);
    return data->inverse * monomial_coordinates(f, data->monomials);
}

/// The same coordinates as a GCombination.
inline GCombination expand_in_gbasis_combination(const Polynomial& f, std::int64_t d, std::int64_t l)
{
    auto coords = expand_in_gbasis(f, d, l);
    GCombination out;
    if (coords.empty())
        return out;
    auto data = gbasis_data(d, l);
    for (std::size_t j = 0; j < coords.size(); ++j)
        out.add(data->basis[j], coords[j]);
    return out;
}

} // namespace bihom
