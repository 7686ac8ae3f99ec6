#pragma once

// Matrix of T on F(d, l) in the monomial basis and in S(d, l), the
// triangularity check, exact spectrum, eigenvectors, orthogonalization and the
// characteristic-polynomial cross-check.
//
// S(d, l) is always ordered greatest first under the lexicographic index
// order. T maps each basis element to itself plus strictly greater elements,
// so in this order the matrix is upper triangular.

#include "transfer.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace bihom {

enum class BasisKind { monomial, gbasis };

inline std::string to_string(BasisKind kind) { return kind == BasisKind::monomial ? "monomial" : "gbasis"; }

inline void require_bidegree(std::int64_t d, std::int64_t l, const char* what)
{
    if (l < 1 || d < l)
        throw std::invalid_argument(std::string(what) + ": need d >= l >= 1, got (" + std::to_string(d) + "," +
                                    std::to_string(l) + ")");
}

/// Matrix of T with column j = coordinates of T(basis_j).
struct OperatorMatrix {
    Bidegree bidegree;
    BasisKind basis = BasisKind::monomial;
    std::vector<std::string> labels;
    ExactMatrix values;

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

inline OperatorMatrix t_matrix(std::int64_t d, std::int64_t l, BasisKind basis)
{
    require_bidegree(d, l, "t_matrix");
    OperatorMatrix out{{d, l}, basis, {}, {}};
    if (basis == BasisKind::monomial) {
        const auto monomials = monomial_basis(d, l);
        out.values = ExactMatrix(monomials.size(), monomials.size());
        for (std::size_t j = 0; j < monomials.size(); ++j) {
            out.labels.push_back(monomials[j].str());
            out.values.set_column(j, monomial_coordinates(apply_T(Polynomial(monomials[j])), monomials));
        }
    } else {
        auto data = gbasis_data(d, l);
        out.values = ExactMatrix(data->basis.size(), data->basis.size());
        for (std::size_t j = 0; j < data->basis.size(); ++j) {
            out.labels.push_back(data->basis[j].str());
            out.values.set_column(j, expand_in_gbasis(apply_T(g_product_expand(data->basis[j])), d, l));
        }
    }
    return out;
}

struct TriangularCheck {
    bool upper_triangular = false;
    std::vector<Rational> diagonal;
};

inline TriangularCheck verify_triangular(std::int64_t d, std::int64_t l)
{
    auto m = t_matrix(d, l, BasisKind::gbasis);
    return {m.values.is_upper_triangular(), m.values.diagonal()};
}

/// 1/2 sum_i (l_i - 1)(2 d_i - l_i). Each summand is even, so this is exact.
inline std::int64_t eigenvalue_formula(const IndexSequence& seq)
{
    std::int64_t twice = 0;
    for (auto [di, li] : seq)
        twice += (li - 1) * (2 * di - li);
    return twice / 2;
}

/// 1/2 (l - 1)(2d - l); eigenvalue of g(d, l) and the largest on F(d, l).
inline std::int64_t dominant_eigenvalue(std::int64_t d, std::int64_t l)
{
    require_bidegree(d, l, "dominant_eigenvalue");
    return eigenvalue_formula({{d, l}});
}

/// 0 is an eigenvalue on F(d, l) iff d >= l^2.
inline bool has_zero_eigenvalue(std::int64_t d, std::int64_t l)
{
    require_bidegree(d, l, "has_zero_eigenvalue");
    return d >= l * l;
}

struct Eigenvector {
    std::int64_t eigenvalue = 0;
    std::size_t basis_index = 0;          // free column of the kernel; T's diagonal there is the eigenvalue
    std::vector<Rational> gbasis_coords;  // in s_basis order
    Polynomial polynomial;
};

namespace detail {

inline Polynomial combine_gbasis(const GBasisData& data, const std::vector<Rational>& coords)
{
    Polynomial::Builder out;
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0)
            out.add(g_product_expand(data.basis[j]), coords[j]);
    return std::move(out).build();
}

inline std::vector<std::int64_t> integer_diagonal(const ExactMatrix& m, Bidegree b)
{
    std::vector<std::int64_t> out;
    for (const auto& v : m.diagonal()) {
        if (!is_integer(v))
            throw internal_error("non-integral diagonal entry " + to_fraction_string(v) + " on F(" +
                                 std::to_string(b.d) + "," + std::to_string(b.l) + ")");
        out.push_back(to_int64(v));
    }
    return out;
}

/// Kernel of (M - lambda I) for each distinct diagonal value lambda of the
/// triangular gbasis matrix, one vector per occurrence of lambda.
inline std::vector<Eigenvector> eigenvectors_from_matrix(const ExactMatrix& m, const GBasisData& data)
{
    const auto diag = integer_diagonal(m, data.bidegree);
    std::map<std::int64_t, std::vector<std::size_t>> positions;
    for (std::size_t j = 0; j < diag.size(); ++j)
        positions[diag[j]].push_back(j);

    std::vector<Eigenvector> out;
    for (const auto& [lambda, where] : positions) {
        ExactMatrix a = m;
        for (std::size_t i = 0; i < a.rows(); ++i)
            a(i, i) -= Rational(lambda);
        auto kernel = kernel_basis(a);
        auto free_cols = kernel_free_columns(a);
        if (kernel.size() != where.size())
            throw internal_error("eigenspace for " + std::to_string(lambda) + " on F(" +
                                 std::to_string(data.bidegree.d) + "," + std::to_string(data.bidegree.l) +
                                 ") has dimension " + std::to_string(kernel.size()) + ", multiplicity is " +
                                 std::to_string(where.size()));
        for (std::size_t v = 0; v < kernel.size(); ++v) {
            Eigenvector ev;
            ev.eigenvalue = lambda;
            ev.basis_index = free_cols[v];
            ev.polynomial = combine_gbasis(data, kernel[v]);
            ev.gbasis_coords = std::move(kernel[v]);
            out.push_back(std::move(ev));
        }
    }
    return out;
}

} // namespace detail

/// Exact eigenvectors in S(d, l) coordinates and as polynomials, ascending
/// eigenvalue. Throws internal_error if an eigenspace is deficient.
inline std::vector<Eigenvector> eigenbasis(std::int64_t d, std::int64_t l)
{
    require_bidegree(d, l, "eigenbasis");
    auto m = t_matrix(d, l, BasisKind::gbasis);
    return detail::eigenvectors_from_matrix(m.values, *gbasis_data(d, l));
}

struct SpectrumEntry {
    std::int64_t eigenvalue = 0;
    IndexSequence sequence;
    std::vector<Rational> gbasis_coords; // empty unless eigenvectors were requested
    Polynomial eigenvector;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumReport {
    Bidegree bidegree;
    std::vector<SpectrumEntry> entries; // ascending eigenvalue, then basis order
    std::int64_t dominant = 0;
    bool has_zero = false;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;

    std::vector<std::int64_t> eigenvalues() const
    {
        std::vector<std::int64_t> out;
        for (const auto& e : entries)
            out.push_back(e.eigenvalue);
        return out;
    }
};

/// One entry per admissible sequence, eigenvalue from the closed formula,
/// cross-checked against the diagonal of the triangular matrix.
inline SpectrumReport spectrum(std::int64_t d, std::int64_t l, bool with_eigenvectors = true)
{
    require_bidegree(d, l, "spectrum");
    auto data = gbasis_data(d, l);
    auto m = t_matrix(d, l, BasisKind::gbasis);
    if (!m.values.is_upper_triangular())
        throw internal_error("T is not upper triangular on S(" + std::to_string(d) + "," + std::to_string(l) + ")");

    std::vector<SpectrumEntry> entries(data->basis.size());
    std::vector<std::int64_t> formula;
    for (std::size_t j = 0; j < data->basis.size(); ++j) {
        entries[j].sequence = data->basis[j].factors();
        entries[j].eigenvalue = eigenvalue_formula(entries[j].sequence);
        formula.push_back(entries[j].eigenvalue);
    }

    auto diagonal = detail::integer_diagonal(m.values, {d, l});
    std::sort(formula.begin(), formula.end());
    std::sort(diagonal.begin(), diagonal.end());
    if (formula != diagonal)
        throw internal_error("eigenvalue formula disagrees with the diagonal of T on F(" + std::to_string(d) + "," +
                             std::to_string(l) + ")");

    if (with_eigenvectors) {
        for (auto& ev : detail::eigenvectors_from_matrix(m.values, *data)) {
            auto& entry = entries[ev.basis_index];
            entry.gbasis_coords = std::move(ev.gbasis_coords);
            entry.eigenvector = std::move(ev.polynomial);
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue < b.eigenvalue; });
    SpectrumReport report;
    report.bidegree = {d, l};
    report.entries = std::move(entries);
    report.dominant = report.entries.back().eigenvalue;
    report.has_zero = report.entries.front().eigenvalue == 0;
    return report;
}

struct OrthogonalEigenvector {
    std::int64_t eigenvalue = 0;
    std::vector<Rational> gbasis_coords;
    Polynomial polynomial;
    Rational norm_squared;
};

/// Gram-Schmidt inside each eigenspace. Vectors are orthogonal with exact
/// rational coordinates; divide by sqrt(norm_squared) for an orthonormal set.
inline std::vector<OrthogonalEigenvector> orthogonal_eigenbasis(std::int64_t d, std::int64_t l)
{
    auto raw = eigenbasis(d, l);
    std::vector<OrthogonalEigenvector> out;
    std::size_t space_start = 0;
    for (auto& ev : raw) {
        if (!out.empty() && out.back().eigenvalue != ev.eigenvalue)
            space_start = out.size();
        OrthogonalEigenvector v{ev.eigenvalue, ev.gbasis_coords, ev.polynomial, Rational(0)};
        for (std::size_t k = space_start; k < out.size(); ++k) {
            const auto& u = out[k];
            const Rational factor = inner_product(v.polynomial, u.polynomial) / u.norm_squared;
            if (factor == 0)
                continue;
            v.polynomial = v.polynomial - u.polynomial * factor;
            for (std::size_t c = 0; c < v.gbasis_coords.size(); ++c)
                v.gbasis_coords[c] -= factor * u.gbasis_coords[c];
        }
        v.norm_squared = inner_product(v.polynomial, v.polynomial);
        if (v.norm_squared <= 0)
            throw internal_error("Gram-Schmidt produced a vector of norm " + to_fraction_string(v.norm_squared));
        out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].eigenvalue != out[j].eigenvalue && inner_product(out[i].polynomial, out[j].polynomial) != 0)
                throw internal_error("eigenvectors for " + std::to_string(out[i].eigenvalue) + " and " +
                                     std::to_string(out[j].eigenvalue) + " are not orthogonal");
    return out;
}

/// Diagonal Gram matrix of the monomial basis under inner_product.
inline ExactMatrix monomial_gram_matrix(std::int64_t d, std::int64_t l)
{
    const auto monomials = monomial_basis(d, l);
    ExactMatrix g(monomials.size(), monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i)
        g(i, i) = Rational(monomial_norm_squared(monomials[i]));
    return g;
}

/// M^T G == G M for the monomial-basis matrix M.
inline bool verify_self_adjoint(std::int64_t d, std::int64_t l)
{
    require_bidegree(d, l, "verify_self_adjoint");
    const auto m = t_matrix(d, l, BasisKind::monomial).values;
    const auto g = monomial_gram_matrix(d, l);
    return m.transpose() * g == g * m;
}

struct CharPolyComparison {
    std::vector<Rational> characteristic; // det(xI - M), M in the monomial basis
    std::vector<Rational> from_spectrum;  // prod (x - lambda)
    bool matches = false;
};

inline CharPolyComparison compare_char_poly(std::int64_t d, std::int64_t l)
{
    require_bidegree(d, l, "char_poly_check");
    CharPolyComparison out;
    out.characteristic = characteristic_polynomial(t_matrix(d, l, BasisKind::monomial).values);
    std::vector<Rational> roots;
    for (auto lambda : spectrum(d, l, false).eigenvalues())
        roots.emplace_back(lambda);
    out.from_spectrum = polynomial_from_roots(roots);
    out.matches = out.characteristic == out.from_spectrum;
    return out;
}

inline bool char_poly_check(std::int64_t d, std::int64_t l) { return compare_char_poly(d, l).matches; }

} // namespace bihom
