#pragma once

// Deterministic JSON encoding of the data model.
//   rational    "numerator/denominator" string, always with the slash
//   monomial    [[variable, exponent], ...] increasing variable
//   polynomial  [{"monomial": ..., "coefficient": ...}, ...] greatest monomial first
//   g-product   [[d, l], ...] greatest factor first
// Objects use insertion-ordered keys so output is byte-stable.

#include "spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bihom::json {

using Json = nlohmann::ordered_json;

inline Json encode(const Rational& q) { return to_fraction_string(q); }

inline Rational decode_rational(const Json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("expected rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json encode(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& q : v)
        out.push_back(encode(q));
    return out;
}

inline std::vector<Rational> decode_rational_vector(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& e : j)
        out.push_back(decode_rational(e));
    return out;
}

inline Json encode(const Monomial& m)
{
    Json out = Json::array();
    for (auto [var, exp] : m.entries())
        out.push_back(Json::array({var, exp}));
    return out;
}

inline Monomial decode_monomial(const Json& j)
{
    std::vector<Monomial::Entry> entries;
    for (const auto& e : j)
        entries.emplace_back(e.at(0).get<Monomial::Variable>(), e.at(1).get<Monomial::Exponent>());
    return Monomial(std::move(entries));
}

inline Json encode(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["monomial"] = encode(m);
        term["coefficient"] = encode(c);
        out.push_back(std::move(term));
    }
    return out;
}

inline Polynomial decode_polynomial(const Json& j)
{
    Polynomial::Builder b;
    for (const auto& term : j)
        b.add(decode_monomial(term.at("monomial")), decode_rational(term.at("coefficient")));
    return std::move(b).build();
}

inline Json encode_pairs(const std::vector<Bidegree>& pairs)
{
    Json out = Json::array();
    for (auto [d, l] : pairs)
        out.push_back(Json::array({d, l}));
    return out;
}

inline std::vector<Bidegree> decode_pairs(const Json& j)
{
    std::vector<Bidegree> out;
    for (const auto& e : j)
        out.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()});
    return out;
}

inline Json encode(const GProduct& p) { return encode_pairs(p.factors()); }
inline GProduct decode_gproduct(const Json& j) { return GProduct(decode_pairs(j)); }

inline Json encode(const GCombination& c)
{
    Json out = Json::array();
    for (const auto& [p, q] : c.terms()) {
        Json term;
        term["product"] = encode(p);
        term["coefficient"] = encode(q);
        out.push_back(std::move(term));
    }
    return out;
}

inline GCombination decode_gcombination(const Json& j)
{
    GCombination out;
    for (const auto& term : j)
        out.add(decode_gproduct(term.at("product")), decode_rational(term.at("coefficient")));
    return out;
}

inline Json encode(const ExactMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(encode(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

inline ExactMatrix decode_matrix(const Json& j)
{
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j.at(r).size() != cols)
            throw std::invalid_argument("decode_matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = decode_rational(j.at(r).at(c));
    }
    return m;
}

inline Json encode(const OperatorMatrix& m)
{
    Json out;
    out["bidegree"] = Json::array({m.bidegree.d, m.bidegree.l});
    out["basis"] = to_string(m.basis);
    out["labels"] = m.labels;
    out["matrix"] = encode(m.values);
    return out;
}

inline OperatorMatrix decode_operator_matrix(const Json& j)
{
    OperatorMatrix m;
    m.bidegree = {j.at("bidegree").at(0).get<std::int64_t>(), j.at("bidegree").at(1).get<std::int64_t>()};
    const auto basis = j.at("basis").get<std::string>();
    if (basis != "monomial" && basis != "gbasis")
        throw std::invalid_argument("decode_operator_matrix: unknown basis '" + basis + "'");
    m.basis = basis == "monomial" ? BasisKind::monomial : BasisKind::gbasis;
    m.labels = j.at("labels").get<std::vector<std::string>>();
    m.values = decode_matrix(j.at("matrix"));
    return m;
}

inline Json encode(const Partition& p) { return p.parts(); }
inline Partition decode_partition(const Json& j) { return Partition(j.get<std::vector<std::uint32_t>>()); }

inline Json encode(const HookLegProfile& profile)
{
    Json out = Json::array();
    for (const auto& e : profile.entries) {
        Json entry;
        entry["hook"] = e.hook;
        entry["leg"] = e.leg;
        entry["increment"] = e.increment;
        out.push_back(std::move(entry));
    }
    return out;
}

inline HookLegProfile decode_hook_leg_profile(const Json& j)
{
    HookLegProfile out;
    for (const auto& e : j)
        out.entries.push_back(
            {e.at("hook").get<std::int64_t>(), e.at("leg").get<std::int64_t>(), e.at("increment").get<std::int64_t>()});
    return out;
}

inline Json encode(const SpectrumReport& r)
{
    Json out;
    out["bidegree"] = Json::array({r.bidegree.d, r.bidegree.l});
    out["dimension"] = r.entries.size();
    out["eigenvalues"] = r.eigenvalues();
    out["dominant"] = r.dominant;
    out["has_zero"] = r.has_zero;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["eigenvalue"] = e.eigenvalue;
        entry["sequence"] = encode_pairs(e.sequence);
        entry["partition"] = encode(profile_to_partition(e.sequence));
        if (!e.gbasis_coords.empty()) {
            entry["coordinates"] = encode(e.gbasis_coords);
            entry["eigenvector"] = encode(e.eigenvector);
        }
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    return out;
}

inline SpectrumReport decode_spectrum_report(const Json& j)
{
    SpectrumReport r;
    r.bidegree = {j.at("bidegree").at(0).get<std::int64_t>(), j.at("bidegree").at(1).get<std::int64_t>()};
    r.dominant = j.at("dominant").get<std::int64_t>();
    r.has_zero = j.at("has_zero").get<bool>();
    for (const auto& e : j.at("entries")) {
        SpectrumEntry entry;
        entry.eigenvalue = e.at("eigenvalue").get<std::int64_t>();
        entry.sequence = decode_pairs(e.at("sequence"));
        if (e.contains("coordinates")) {
            entry.gbasis_coords = decode_rational_vector(e.at("coordinates"));
            entry.eigenvector = decode_polynomial(e.at("eigenvector"));
        }
        r.entries.push_back(std::move(entry));
    }
    return r;
}

/// {"command", "params", "status", "result", "detail"} in that order.
inline Json envelope(const std::string& command, Json params, bool ok, Json result, const std::string& detail = {})
{
    Json out;
    out["command"] = command;
    out["params"] = std::move(params);
    out["status"] = ok ? "ok" : "fail";
    out["result"] = std::move(result);
    out["detail"] = detail.empty() ? Json(nullptr) : Json(detail);
    return out;
}

} // namespace bihom::json
