// Acceptance sweep: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <bihom/cli.hpp>

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bihom;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Criterion {
    int number;
    std::string title;
    double time_limit_s; // 0 = no limit
    std::function<Outcome()> run;
};

std::string where(std::int64_t d, std::int64_t l)
{
    return "F(" + std::to_string(d) + "," + std::to_string(l) + ")";
}

Outcome spectrum_12_4()
{
    Outcome o;
    std::ostringstream out, err;
    cli::Options opts;
    opts.format = cli::Format::json;
    if (cli::cmd_spectrum(12, 4, opts, out, err) != cli::exit_ok) {
        o.fail("spectrum 12 4 exited with an error: " + err.str());
        return o;
    }
    auto doc = json::Json::parse(out.str());
    auto values = doc.at("result").at("eigenvalues").get<std::vector<std::int64_t>>();
    const std::vector<std::int64_t> expected{1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30};
    if (values != expected)
        o.fail("got " + doc.at("result").at("eigenvalues").dump());
    return o;
}

Outcome hooks_of_28_box_diagram()
{
    Outcome o;
    auto profile = hook_leg_profile(Partition({7, 7, 5, 4, 3, 2}));
    const std::vector<HookLegEntry> expected{{12, 6, 1}, {10, 5, 2}, {5, 3, 2}, {1, 1, 1}};
    if (profile.entries != expected)
        o.fail("profile " + json::encode(profile).dump());
    return o;
}

Outcome basis_property()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 14; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            const auto p = count_partitions(d, l);
            const auto basis = s_basis(d, l);
            if (basis.size() != p) {
                o.fail(where(d, l) + ": |S| = " + std::to_string(basis.size()) + ", p = " + std::to_string(p));
                continue;
            }
            const auto monomials = monomial_basis(d, l);
            ExactMatrix e(monomials.size(), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j)
                e.set_column(j, monomial_coordinates(g_product_expand(basis[j]), monomials));
            if (rank(e) != p)
                o.fail(where(d, l) + ": expansion matrix has rank " + std::to_string(rank(e)));
        }
    return o;
}

Outcome triangularity_and_formula()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            auto check = verify_triangular(d, l);
            if (!check.upper_triangular) {
                o.fail(where(d, l) + ": not upper triangular");
                continue;
            }
            std::vector<Rational> formula;
            for (const auto& seq : admissible_sequences(d, l))
                formula.emplace_back(eigenvalue_formula(seq));
            auto diagonal = check.diagonal;
            std::sort(formula.begin(), formula.end());
            std::sort(diagonal.begin(), diagonal.end());
            if (formula != diagonal)
                o.fail(where(d, l) + ": diagonal differs from the formula");
            // det(xI - M) for the monomial matrix against prod (x - lambda).
            auto charpoly = characteristic_polynomial(t_matrix(d, l, BasisKind::monomial).values);
            if (charpoly != polynomial_from_roots(formula))
                o.fail(where(d, l) + ": characteristic polynomial has different roots");
        }
    return o;
}

Outcome self_adjoint_and_positive()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            if (!verify_self_adjoint(d, l))
                o.fail(where(d, l) + ": M^T G != G M");
            for (const auto& v : verify_triangular(d, l).diagonal)
                if (!is_integer(v) || v < 0)
                    o.fail(where(d, l) + ": eigenvalue " + to_fraction_string(v));
        }
    return o;
}

Outcome dominant()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 14; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            const std::int64_t lambda = (l - 1) * (2 * d - l) / 2;
            const auto g = g_poly(d, l);
            if (apply_T(g) != g * Rational(lambda))
                o.fail(where(d, l) + ": g(d,l) is not an eigenfunction for " + std::to_string(lambda));
            auto values = spectrum(d, l, false).eigenvalues();
            if (values.back() != lambda)
                o.fail(where(d, l) + ": spectrum maximum " + std::to_string(values.back()));
        }
    return o;
}

Outcome zero_law()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 14; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            auto values = spectrum(d, l, false).eigenvalues();
            const bool zero = std::find(values.begin(), values.end(), 0) != values.end();
            if (zero != (d >= l * l))
                o.fail(where(d, l) + ": zero in spectrum is " + (zero ? "true" : "false"));
        }
    return o;
}

Outcome structural()
{
    Outcome o;
    std::size_t count = 0;
    for (std::int64_t d = 1; d <= 10; ++d)
        for (std::int64_t l = 1; l <= d; ++l)
            for (const auto& p : ordered_products(d, l)) {
                ++count;
                if (expand(apply_T_structural(p)) != apply_T(g_product_expand(p)))
                    o.fail("mismatch on " + p.str());
            }
    if (count == 0)
        o.fail("no products enumerated");
    return o;
}

Outcome straightening()
{
    Outcome o;
    std::size_t irregular = 0;
    for (std::int64_t d1 = 1; d1 <= 11; ++d1)
        for (std::int64_t l1 = 1; l1 <= d1; ++l1)
            for (std::int64_t d2 = 1; d1 + d2 <= 12; ++d2)
                for (std::int64_t l2 = 1; l2 <= d2; ++l2) {
                    if (is_regular_pair({d1, l1}, {d2, l2}))
                        continue;
                    ++irregular;
                    const std::string input = "g(" + std::to_string(d1) + "," + std::to_string(l1) + ")g(" +
                                              std::to_string(d2) + "," + std::to_string(l2) + ")";
                    auto out = straighten_pair(d1, l1, d2, l2);
                    if (expand(out) != g_poly(d1, l1) * g_poly(d2, l2))
                        o.fail(input + ": expansion differs");
                    for (const auto& [p, c] : out.terms()) {
                        if (p.size() > 2) {
                            o.fail(input + ": " + p.str() + " has more than two factors");
                            continue;
                        }
                        const GIndex first = p.factors()[0];
                        const GIndex second = p.size() == 2 ? p.factors()[1] : GIndex{0, 0};
                        if (!is_regular_pair(first, second))
                            o.fail(input + ": " + p.str() + " is irregular");
                        if (!(first.d > d1 || (first.d == d1 && first.l < l1)))
                            o.fail(input + ": " + p.str() + " does not beat (" + std::to_string(d1) + "," +
                                   std::to_string(l1) + ")");
                    }
                }
    if (irregular == 0)
        o.fail("no irregular pairs enumerated");
    return o;
}

Outcome algiden()
{
    Outcome o;
    std::size_t count = 0;
    for (std::int64_t n = 0; 2 * n + 1 <= 11; ++n)
        for (std::int64_t m = 1; 2 * m <= 11; ++m)
            for (std::int64_t p = 1; p <= m; ++p)
                for (std::int64_t lp = 2 * p - 1; lp <= 2 * m - 1; ++lp) {
                    ++count;
                    if (!algiden_residual(n, m, p, lp).is_zero())
                        o.fail("nonzero residual at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                               " p=" + std::to_string(p) + " l'=" + std::to_string(lp));
                }
    if (count == 0)
        o.fail("no parameters enumerated");
    return o;
}

Outcome symmetric_functions()
{
    Outcome o;
    constexpr std::size_t order = 10;
    auto h = oracle::series_exp(oracle::x_series(order), order);
    auto e = oracle::series_exp(oracle::x_series(order, [](std::size_t k) { return k % 2 == 1 ? 1 : -1; }), order);
    oracle::Series e_lib(order + 1), h_neg(order + 1);
    e_lib[0] = h_neg[0] = Polynomial::constant(Rational(1));
    for (std::size_t k = 1; k <= order; ++k) {
        const auto hk = complete_symmetric(std::int64_t(k));
        const auto ek = elementary_symmetric(std::int64_t(k));
        if (hk != h[k])
            o.fail("h_" + std::to_string(k) + " differs from the series coefficient");
        if (ek != e[k])
            o.fail("e_" + std::to_string(k) + " differs from the series coefficient");
        e_lib[k] = ek;
        h_neg[k] = hk * Rational(k % 2 == 0 ? 1 : -1);
    }
    auto product = oracle::series_mul(e_lib, h_neg, order);
    if (product[0] != Polynomial::constant(Rational(1)))
        o.fail("constant term of e(z)h(-z) is " + product[0].str());
    for (std::size_t k = 1; k <= order; ++k)
        if (!product[k].is_zero())
            o.fail("z^" + std::to_string(k) + " coefficient of e(z)h(-z) is " + product[k].str());
    return o;
}

Outcome orthogonal_basis()
{
    Outcome o;
    for (std::int64_t d = 1; d <= 10; ++d)
        for (std::int64_t l = 1; l <= d; ++l) {
            auto basis = orthogonal_eigenbasis(d, l);
            if (basis.size() != count_partitions(d, l))
                o.fail(where(d, l) + ": " + std::to_string(basis.size()) + " vectors");
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!(inner_product(basis[i].polynomial, basis[i].polynomial) > 0))
                    o.fail(where(d, l) + ": vector " + std::to_string(i) + " has non-positive norm");
                for (std::size_t j = i + 1; j < basis.size(); ++j)
                    if (inner_product(basis[i].polynomial, basis[j].polynomial) != 0)
                        o.fail(where(d, l) + ": vectors " + std::to_string(i) + " and " + std::to_string(j) +
                               " are not orthogonal");
            }
        }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "spectrum of T on F(12,4)", 5.0, spectrum_12_4},
        {2, "hook/leg statistics of (7,7,5,4,3,2)", 0, hooks_of_28_box_diagram},
        {3, "S(d,l) is a basis, d <= 14", 0, basis_property},
        {4, "triangularity, eigenvalue formula and char poly, d <= 12", 120.0, triangularity_and_formula},
        {5, "self-adjointness and non-negative integer spectrum, d <= 12", 0, self_adjoint_and_positive},
        {6, "dominant eigenvalue, d <= 14", 0, dominant},
        {7, "zero eigenvalue iff d >= l^2, d <= 14", 0, zero_law},
        {8, "structural action, total degree <= 10", 0, structural},
        {9, "straightening of irregular pairs, d' + d'' <= 12", 0, straightening},
        {10, "three-parameter identity, 2n+1 <= 11", 0, algiden},
        {11, "h_k, e_k decompositions and e(z)h(-z) = 1, k <= 10", 0, symmetric_functions},
        {12, "orthogonal eigenbasis, d <= 10", 0, orthogonal_basis},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && c.time_limit_s > 0 && seconds > c.time_limit_s) {
            std::ostringstream msg;
            msg << "took " << std::fixed << std::setprecision(2) << seconds << " s, limit " << c.time_limit_s << " s";
            outcome.fail(msg.str());
        }
        if (!outcome.ok)
            ++failures;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.number << "] " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << seconds << " s)";
        if (!outcome.ok)
            std::cout << "  " << outcome.detail;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
