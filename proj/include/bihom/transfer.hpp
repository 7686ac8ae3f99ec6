#pragma once

// The operator T = 1/2 sum_{a+b=p+q} x_a x_b d/dx_p d/dx_q, applied either to
// monomials directly or to products of g's through its closed-form action,
// plus straightening of irregular pairs g(d',l')g(d'',l'').

#include "genfun.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace bihom {

/// Direct monomial-level application. For every ordered pair (p, q) in the
/// support (p == q allowed when the exponent is >= 2), multiply
/// d/dx_p d/dx_q mu by sum_{a+b=p+q} x_a x_b; halve at the end.
inline Polynomial apply_T(const Polynomial& f)
{
    Polynomial::Builder out;
    for (const auto& [mu, coeff] : f.terms()) {
        for (auto [p, ep] : mu.entries()) {
            for (auto [q, eq] : mu.entries()) {
                std::int64_t mult;
                Monomial rest;
                if (p == q) {
                    if (ep < 2)
                        continue;
                    mult = std::int64_t(ep) * (ep - 1);
                    rest = mu.divided_by(p, 2);
                } else {
                    mult = std::int64_t(ep) * eq;
                    rest = mu.divided_by(p).divided_by(q);
                }
                const Rational c = coeff * Rational(mult) / Rational(2);
                const std::uint32_t n = p + q;
                for (std::uint32_t a = 1; a < n; ++a)
                    out.add(rest * Monomial({{a, 1}, {n - a, 1}}), c);
            }
        }
    }
    return std::move(out).build();
}

namespace detail {

// Product with factors i and j replaced; nullopt when a replacement vanishes.
inline std::optional<GProduct> replace_pair(const std::vector<GIndex>& factors, std::size_t i, GIndex new_i,
                                            std::size_t j, GIndex new_j)
{
    if (!g_is_nonzero(new_i.d, new_i.l) || !g_is_nonzero(new_j.d, new_j.l))
        return std::nullopt;
    std::vector<GIndex> next = factors;
    next[i] = new_i;
    next[j] = new_j;
    return GProduct(std::move(next));
}

} // namespace detail

/// Closed-form action of T on g(d_1,l_1)...g(d_k,l_k), factors taken in the
/// given order:
///   sum_i (l_i - 1)(d_i - l_i/2) P
/// - sum_{i<j} sum_{p>=0} l_j(l_j+1) P[i -> (d_i+p, l_i-1), j -> (d_j-p, l_j+1)]
/// + sum_{i<j} sum_{p>=1} l_i(l_i+1) P[i -> (d_i+p, l_i+1), j -> (d_j-p, l_j-1)]
/// Different orders give different formal combinations with the same expansion.
inline GCombination apply_T_structural(const std::vector<GIndex>& factors)
{
    std::vector<GIndex> f;
    for (auto g : factors) {
        if (g_is_one(g.d, g.l))
            continue;
        if (!g_is_nonzero(g.d, g.l))
            throw std::invalid_argument("apply_T_structural: g(" + std::to_string(g.d) + "," +
                                        std::to_string(g.l) + ") is not a valid nonzero factor");
        f.push_back(g);
    }
    GCombination out;

    Rational diagonal(0);
    for (auto g : f)
        diagonal += Rational(g.l - 1) * (Rational(g.d) - Rational(g.l) / Rational(2));
    out.add(GProduct(f), diagonal);

    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            const auto [di, li] = f[i];
            const auto [dj, lj] = f[j];
            // g(dj - p, lj + 1) needs dj - p >= lj + 1.
            const Rational lower_coeff(-lj * (lj + 1));
            for (std::int64_t p = 0; dj - p >= lj + 1; ++p)
                if (auto next = detail::replace_pair(f, i, {di + p, li - 1}, j, {dj - p, lj + 1}))
                    out.add(*next, lower_coeff);
            // g(dj - p, lj - 1) needs dj - p >= lj - 1 and dj - p >= 0.
            const Rational raise_coeff(li * (li + 1));
            for (std::int64_t p = 1; dj - p >= std::max<std::int64_t>(lj - 1, 0); ++p)
                if (auto next = detail::replace_pair(f, i, {di + p, li + 1}, j, {dj - p, lj - 1}))
                    out.add(*next, raise_coeff);
        }
    }
    return out;
}

/// The same action with the factors in canonical (descending) order.
inline GCombination apply_T_structural(const GProduct& product) { return apply_T_structural(product.factors()); }

/// g(d',l')g(d'',l'') is regular when d' > d'' + l'. A single factor (paired
/// with g(0,0)) is regular.
inline bool is_regular_pair(GIndex first, GIndex second) noexcept
{
    if (g_is_one(second.d, second.l))
        return true;
    return first.d > second.d + first.l;
}

/// All regular products of bidegree (d, l) with at most two factors, greatest
/// first. These are exactly the elements of S(d, l) with k <= 2.
inline std::vector<GProduct> regular_pairs(std::int64_t d, std::int64_t l)
{
    std::vector<GProduct> out;
    for (const auto& p : s_basis(d, l))
        if (p.size() <= 2)
            out.push_back(p);
    return out;
}

/// Rewrites an irregular pair as a combination of regular pairs of the same
/// total bidegree; regular input comes back unchanged.
inline GCombination straighten_pair(std::int64_t d1, std::int64_t l1, std::int64_t d2, std::int64_t l2)
{
    if (l1 < 1 || l2 < 1 || d1 < l1 || d2 < l2)
        throw std::invalid_argument("straighten_pair: need l', l'' >= 1, d' >= l', d'' >= l''");
    GProduct input({{d1, l1}, {d2, l2}});
    if (is_regular_pair({d1, l1}, {d2, l2}))
        return GCombination(input);

    const std::int64_t d = d1 + d2, l = l1 + l2;
    const auto candidates = regular_pairs(d, l);
    const auto monomials = monomial_basis(d, l);
    ExactMatrix system(monomials.size(), candidates.size());
    for (std::size_t j = 0; j < candidates.size(); ++j)
        system.set_column(j, monomial_coordinates(g_product_expand(candidates[j]), monomials));
    auto solution = solve(system, monomial_coordinates(g_product_expand(input), monomials));
    if (!solution)
        throw internal_error("straighten_pair: " + input.str() + " is not in the span of regular pairs");
    GCombination out;
    for (std::size_t j = 0; j < candidates.size(); ++j)
        out.add(candidates[j], (*solution)[j]);
    return out;
}

/// Residual of the three-parameter identity for d = 2n+1, l = 2m:
///   sum_{d1+d2=d, l1+l2=l} (-1)^{l2} prod_{i=1}^{2p-1} (d1+p-n-i)
///       prod_{j=2p-1, j != l'}^{2m-1} (l1-j) g(d1,l1) g(d2,l2)
/// which vanishes identically.
inline Polynomial algiden_residual(std::int64_t n, std::int64_t m, std::int64_t p, std::int64_t l_prime)
{
    if (n < 0 || m < 1)
        throw std::invalid_argument("algiden_residual: need n >= 0 and m >= 1");
    if (p < 1 || p > m)
        throw std::invalid_argument("algiden_residual: need 1 <= p <= m");
    if (l_prime < 2 * p - 1 || l_prime > 2 * m - 1)
        throw std::invalid_argument("algiden_residual: need 2p-1 <= l' <= 2m-1");

    const std::int64_t d = 2 * n + 1, l = 2 * m;
    Polynomial::Builder out;
    for (std::int64_t d1 = 0; d1 <= d; ++d1) {
        for (std::int64_t l1 = 0; l1 <= l; ++l1) {
            const std::int64_t d2 = d - d1, l2 = l - l1;
            if (!g_is_nonzero(d1, l1) || !g_is_nonzero(d2, l2))
                continue;
            Integer weight(l2 % 2 == 0 ? 1 : -1);
            for (std::int64_t i = 1; i <= 2 * p - 1; ++i)
                weight *= Integer(d1 + p - n - i);
            for (std::int64_t j = 2 * p - 1; j <= 2 * m - 1; ++j)
                if (j != l_prime)
                    weight *= Integer(l1 - j);
            if (weight == 0)
                continue;
            out.add(g_poly(d1, l1) * g_poly(d2, l2), Rational(weight));
        }
    }
    return std::move(out).build();
}

} // namespace bihom
