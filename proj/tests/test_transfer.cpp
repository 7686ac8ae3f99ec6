#include <catch2/catch_amalgamated.hpp>

#include <bihom/transfer.hpp>

#include "oracles.hpp"

using namespace bihom;

namespace {

Polynomial x(Monomial::Variable k) { return Polynomial::variable(k); }
Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

GCombination combo(std::initializer_list<std::pair<GProduct, std::int64_t>> terms)
{
    GCombination out;
    for (const auto& [p, c] : terms)
        out.add(p, Rational(c));
    return out;
}

} // namespace

TEST_CASE("T on monomials", "[transfer]")
{
    for (Monomial::Variable d = 1; d <= 10; ++d)
        CHECK(apply_T(x(d)).is_zero());
    CHECK(apply_T(x(1) * x(2)) == x(1) * x(2) * q(2));
    CHECK(apply_T(x(1) * x(1) * x(3)) == x(1) * x(1) * x(3) * q(5) + x(1) * x(2) * x(2) * q(2));
    Polynomial power = Polynomial::constant(q(1));
    for (std::int64_t d = 1; d <= 8; ++d) {
        power = power * x(1);
        CHECK(apply_T(power) == power * q(d * (d - 1), 2));
    }
    CHECK(apply_T(Polynomial{}).is_zero());
    CHECK(apply_T(Polynomial::constant(q(4))).is_zero());
}

TEST_CASE("T agrees with its definition through generic derivatives", "[transfer][property]")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        auto f = oracle::random_polynomial(rng, 4, 6, 3);
        CHECK(apply_T(f) == oracle::T_by_definition(f));
    }
    for (std::int64_t d = 1; d <= 8; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            for (const auto& m : monomial_basis(d, l))
                CHECK(apply_T(Polynomial(m)) == oracle::T_by_definition(Polynomial(m)));
}

TEST_CASE("T preserves the bigrading", "[transfer][property]")
{
    std::mt19937 rng(23);
    for (std::int64_t d = 1; d <= 10; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            auto f = oracle::random_homogeneous(rng, d, l);
            CHECK(apply_T(f).is_homogeneous({d, l}));
        }
    for (int trial = 0; trial < 50; ++trial) {
        auto f = oracle::random_polynomial(rng, 5, 5, 3);
        CHECK(apply_T(apply_degree_operator(f)) == apply_degree_operator(apply_T(f)));
        CHECK(apply_T(apply_length_operator(f)) == apply_length_operator(apply_T(f)));
    }
}

TEST_CASE("T is self-adjoint and non-negative", "[transfer][property]")
{
    std::mt19937 rng(29);
    for (std::int64_t d = 2; d <= 9; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            for (int trial = 0; trial < 3; ++trial) {
                auto f = oracle::random_homogeneous(rng, d, l);
                auto g = oracle::random_homogeneous(rng, d, l);
                CHECK(inner_product(apply_T(f), g) == inner_product(f, apply_T(g)));
                CHECK(inner_product(apply_T(f), f) >= 0);
            }
}

TEST_CASE("structural action on g-products", "[transfer]")
{
    CHECK(apply_T_structural(GProduct{{3, 1}, {1, 1}}) == combo({{GProduct{{4, 2}}, 2}}));
    CHECK(apply_T_structural(GProduct{{4, 2}}) == combo({{GProduct{{4, 2}}, 3}}));

    // Factors in the order written, not the canonical one.
    auto t = apply_T_structural(std::vector<GIndex>{{2, 2}, {3, 1}});
    CHECK(t == combo({{GProduct{{3, 1}, {2, 2}}, -1}, {GProduct{{3, 2}, {2, 1}}, -2}, {GProduct{{5, 3}}, 6}}));
    CHECK(expand(t) == x(1) * x(1) * x(3) * q(5, 2) + x(1) * x(2) * x(2));
    CHECK(expand(t) == apply_T(g_product_expand({{2, 2}, {3, 1}})));

    auto canonical = apply_T_structural(GProduct{{2, 2}, {3, 1}});
    CHECK(canonical == combo({{GProduct{{4, 2}, {1, 1}}, 2}, {GProduct{{3, 1}, {2, 2}}, 1}}));
    CHECK(expand(canonical) == expand(t));
    CHECK_THROWS_AS(apply_T_structural(std::vector<GIndex>{{2, 0}}), std::invalid_argument);

    CHECK(apply_T_structural(GProduct{}).is_zero());
    CHECK(apply_T_structural(GProduct{{5, 1}}).is_zero());
}

TEST_CASE("structural and monomial T agree for total degree <= 10", "[transfer][property]")
{
    for (std::int64_t d = 1; d <= 10; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            for (const auto& p : ordered_products(d, l)) {
                INFO(p.str());
                const auto expected = apply_T(g_product_expand(p));
                CHECK(expand(apply_T_structural(p)) == expected);
                auto reversed = p.factors();
                std::reverse(reversed.begin(), reversed.end());
                CHECK(expand(apply_T_structural(reversed)) == expected);
            }
}

TEST_CASE("g(d,l) is an eigenfunction", "[transfer]")
{
    for (std::int64_t d = 1; d <= 10; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            CHECK(apply_T(g_poly(d, l)) == g_poly(d, l) * q((l - 1) * (2 * d - l), 2));
}

TEST_CASE("straightening irregular pairs", "[transfer]")
{
    CHECK(straighten_pair(2, 1, 2, 1) == combo({{GProduct{{4, 2}}, 2}, {GProduct{{3, 1}, {1, 1}}, -2}}));
    CHECK(straighten_pair(2, 1, 2, 1).str() == "2*g(4,2) - 2*g(3,1)g(1,1)");
    CHECK(straighten_pair(2, 1, 1, 1) == combo({{GProduct{{3, 2}}, 1}}));
    CHECK(straighten_pair(4, 1, 1, 1) == combo({{GProduct{{4, 1}, {1, 1}}, 1}}));

    CHECK_THROWS_AS(straighten_pair(2, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(straighten_pair(2, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(straighten_pair(2, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("straightened pairs are regular and beat the input", "[transfer][property]")
{
    for (std::int64_t d1 = 1; d1 <= 11; ++d1)
        for (std::int64_t l1 = 1; l1 <= d1; ++l1)
            for (std::int64_t d2 = 1; d1 + d2 <= 12; ++d2)
                for (std::int64_t l2 = 1; l2 <= d2; ++l2) {
                    INFO("g(" << d1 << "," << l1 << ")g(" << d2 << "," << l2 << ")");
                    auto out = straighten_pair(d1, l1, d2, l2);
                    CHECK(expand(out) == g_poly(d1, l1) * g_poly(d2, l2));
                    if (is_regular_pair({d1, l1}, {d2, l2}))
                        continue;
                    for (const auto& [p, c] : out.terms()) {
                        REQUIRE(p.size() <= 2);
                        auto first = p.factors()[0];
                        GIndex second = p.size() == 2 ? p.factors()[1] : GIndex{0, 0};
                        CHECK(is_regular_pair(first, second));
                        CHECK(index_succeeds(first, {d1, l1}));
                    }
                }
}

TEST_CASE("three-parameter identity", "[transfer]")
{
    CHECK(algiden_residual(1, 1, 1, 1).is_zero());
    CHECK(algiden_residual(2, 1, 1, 1).is_zero());
    CHECK_THROWS_AS(algiden_residual(1, 1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(algiden_residual(1, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(algiden_residual(1, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(algiden_residual(1, 2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(algiden_residual(-1, 1, 1, 1), std::invalid_argument);

    // Term by term for (1,1,1,1): -g(3,2) - g(2,1)g(1,1) + 2 g(3,2).
    auto terms = g_poly(3, 2) * q(-1) - g_poly(2, 1) * g_poly(1, 1) + g_poly(3, 2) * q(2);
    CHECK(terms.is_zero());
}

TEST_CASE("three-parameter identity vanishes for d <= 11", "[transfer][property]")
{
    std::size_t cases = 0;
    for (std::int64_t n = 0; 2 * n + 1 <= 11; ++n)
        for (std::int64_t m = 1; 2 * m <= 2 * n + 1; ++m)
            for (std::int64_t p = 1; p <= m; ++p)
                for (std::int64_t lp = 2 * p - 1; lp <= 2 * m - 1; ++lp) {
                    INFO("n=" << n << " m=" << m << " p=" << p << " l'=" << lp);
                    CHECK(algiden_residual(n, m, p, lp).is_zero());
                    ++cases;
                }
    CHECK(cases > 0);
}
