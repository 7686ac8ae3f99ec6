#pragma once

// Subcommand implementations behind the `bihom` executable. Each command
// writes its rendering to `out`, diagnostics to `err`, and returns the exit
// code: 0 success, 1 verification / internal failure, 2 usage or resource
// error.

#include "serialization.hpp"

#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bihom::cli {

enum class Format { table, json, csv };

struct Options {
    Format format = Format::table;
    bool eigenvectors = false;
    std::uint64_t max_dim = 2000;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::int64_t>& reference_spectrum_12_4()
{
    static const std::vector<std::int64_t> values{1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30};
    return values;
}

namespace detail {

using json::Json;

inline void check_bidegree(std::int64_t d, std::int64_t l)
{
    if (l < 1 || d < l)
        throw usage_error("need d >= l >= 1, got d=" + std::to_string(d) + " l=" + std::to_string(l));
}

inline void check_dimension(std::int64_t d, std::int64_t l, const Options& opts)
{
    const auto dim = count_partitions(d, l);
    if (dim > opts.max_dim)
        throw usage_error("F(" + std::to_string(d) + "," + std::to_string(l) + ") has dimension " +
                          std::to_string(dim) + ", above --max-dim " + std::to_string(opts.max_dim));
}

inline Json bidegree_params(std::int64_t d, std::int64_t l)
{
    Json p;
    p["d"] = d;
    p["l"] = l;
    return p;
}

inline std::string pairs_str(const IndexSequence& seq)
{
    std::string s;
    for (auto [d, l] : seq)
        s += "(" + std::to_string(d) + "," + std::to_string(l) + ")";
    return s;
}

inline std::string join_ints(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Runs `body`; maps exceptions to exit codes and, under --json, to a failure
// envelope so stdout always carries one document.
template <typename Body>
int guarded(const std::string& command, const Json& params, const Options& opts, std::ostream& out,
            std::ostream& err, Body&& body)
{
    auto fail = [&](int code, const std::string& message) {
        if (opts.format == Format::json)
            out << json::envelope(command, params, false, nullptr, message).dump(2) << "\n";
        err << "bihom " << command << ": " << message << "\n";
        return code;
    };
    try {
        return body();
    } catch (const internal_error& e) {
        return fail(exit_failure, std::string("internal failure: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return fail(exit_usage, e.what());
    } catch (const std::out_of_range& e) {
        return fail(exit_usage, e.what());
    }
}

} // namespace detail

/// Partition argument: comma-separated weakly decreasing positive integers.
inline Partition parse_partition(const std::string& text)
{
    std::vector<std::uint32_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("malformed partition '" + text + "'");
        unsigned long v = std::stoul(item);
        if (v == 0 || v > 1000000)
            throw usage_error("partition parts must be positive, got '" + item + "'");
        parts.push_back(std::uint32_t(v));
    }
    if (parts.empty())
        throw usage_error("empty partition");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

inline int cmd_spectrum(std::int64_t d, std::int64_t l, const Options& opts, std::ostream& out, std::ostream& err)
{
    auto params = detail::bidegree_params(d, l);
    return detail::guarded("spectrum", params, opts, out, err, [&] {
        detail::check_bidegree(d, l);
        detail::check_dimension(d, l, opts);
        const auto report = spectrum(d, l, opts.eigenvectors);
        switch (opts.format) {
        case Format::json:
            out << json::envelope("spectrum", params, true, json::encode(report)).dump(2) << "\n";
            break;
        case Format::csv:
            out << "eigenvalue,sequence,partition" << (opts.eigenvectors ? ",eigenvector" : "") << "\n";
            for (const auto& e : report.entries) {
                out << e.eigenvalue << "," << detail::csv_quote(detail::pairs_str(e.sequence)) << ","
                    << detail::csv_quote(profile_to_partition(e.sequence).str());
                if (opts.eigenvectors)
                    out << "," << detail::csv_quote(e.eigenvector.str());
                out << "\n";
            }
            break;
        case Format::table:
            out << "F(" << d << "," << l << ")  dimension " << report.entries.size() << "\n";
            out << "eigenvalues: [" << detail::join_ints(report.eigenvalues(), ", ") << "]\n";
            out << "dominant: " << report.dominant << "\n";
            out << "zero eigenvalue: " << (report.has_zero ? "yes" : "no") << "\n";
            out << std::setw(8) << "lambda" << "  " << std::left << std::setw(28) << "sequence" << "partition"
                << std::right << "\n";
            for (const auto& e : report.entries) {
                out << std::setw(8) << e.eigenvalue << "  " << std::left << std::setw(28)
                    << detail::pairs_str(e.sequence) << profile_to_partition(e.sequence).str() << std::right << "\n";
                if (opts.eigenvectors)
                    out << "          v = " << e.eigenvector.str() << "\n";
            }
            break;
        }
        return exit_ok;
    });
}

inline int cmd_basis(std::int64_t d, std::int64_t l, const Options& opts, std::ostream& out, std::ostream& err)
{
    auto params = detail::bidegree_params(d, l);
    return detail::guarded("basis", params, opts, out, err, [&] {
        detail::check_bidegree(d, l);
        detail::check_dimension(d, l, opts);
        const auto basis = s_basis(d, l);
        switch (opts.format) {
        case Format::json: {
            json::Json entries = json::Json::array();
            for (const auto& p : basis) {
                json::Json e;
                e["sequence"] = json::encode(p);
                e["partition"] = json::encode(profile_to_partition(p.factors()));
                entries.push_back(std::move(e));
            }
            json::Json result;
            result["bidegree"] = json::Json::array({d, l});
            result["dimension"] = basis.size();
            result["basis"] = std::move(entries);
            out << json::envelope("basis", params, true, std::move(result)).dump(2) << "\n";
            break;
        }
        case Format::csv:
            out << "index,product,partition\n";
            for (std::size_t i = 0; i < basis.size(); ++i)
                out << i + 1 << "," << detail::csv_quote(basis[i].str()) << ","
                    << detail::csv_quote(profile_to_partition(basis[i].factors()).str()) << "\n";
            break;
        case Format::table:
            out << "S(" << d << "," << l << ")  dimension " << basis.size() << "\n";
            for (std::size_t i = 0; i < basis.size(); ++i)
                out << std::setw(4) << i + 1 << "  " << std::left << std::setw(32) << basis[i].str() << std::right
                    << profile_to_partition(basis[i].factors()).str() << "\n";
            break;
        }
        return exit_ok;
    });
}

inline int cmd_gpoly(std::int64_t d, std::int64_t l, const Options& opts, std::ostream& out, std::ostream& err)
{
    auto params = detail::bidegree_params(d, l);
    return detail::guarded("gpoly", params, opts, out, err, [&] {
        if (d < 0 || l < 0)
            throw usage_error("need d, l >= 0");
        detail::check_dimension(d, l, opts);
        const auto g = g_poly(d, l);
        if (opts.format == Format::json) {
            json::Json result;
            result["text"] = g.str();
            result["polynomial"] = json::encode(g);
            out << json::envelope("gpoly", params, true, std::move(result)).dump(2) << "\n";
        } else if (opts.format == Format::csv) {
            out << "monomial,coefficient\n";
            for (const auto& [m, c] : g.terms())
                out << m.str() << "," << to_fraction_string(c) << "\n";
        } else {
            out << g.str() << "\n";
        }
        return exit_ok;
    });
}

inline int cmd_straighten(std::int64_t d1, std::int64_t l1, std::int64_t d2, std::int64_t l2, const Options& opts,
                          std::ostream& out, std::ostream& err)
{
    json::Json params;
    params["d1"] = d1;
    params["l1"] = l1;
    params["d2"] = d2;
    params["l2"] = l2;
    return detail::guarded("straighten", params, opts, out, err, [&] {
        if (l1 < 1 || l2 < 1 || d1 < l1 || d2 < l2)
            throw usage_error("need d1 >= l1 >= 1 and d2 >= l2 >= 1");
        detail::check_dimension(d1 + d2, l1 + l2, opts);
        const bool regular = is_regular_pair({d1, l1}, {d2, l2});
        const auto combo = straighten_pair(d1, l1, d2, l2);
        if (opts.format == Format::json) {
            json::Json result;
            result["regular"] = regular;
            result["text"] = combo.str();
            result["combination"] = json::encode(combo);
            out << json::envelope("straighten", params, true, std::move(result)).dump(2) << "\n";
        } else if (opts.format == Format::csv) {
            out << "product,coefficient\n";
            for (const auto& [p, c] : combo.terms())
                out << p.str() << "," << to_fraction_string(c) << "\n";
        } else {
            out << "g(" << d1 << "," << l1 << ")g(" << d2 << "," << l2 << ")"
                << (regular ? " is regular" : " = " + combo.str()) << "\n";
        }
        return exit_ok;
    });
}

inline int cmd_hooks(const std::string& partition_text, const Options& opts, std::ostream& out, std::ostream& err)
{
    json::Json params;
    params["partition"] = partition_text;
    return detail::guarded("hooks", params, opts, out, err, [&] {
        const auto lambda = parse_partition(partition_text);
        const auto profile = hook_leg_profile(lambda);
        std::vector<std::int64_t> increments;
        for (const auto& e : profile.entries)
            increments.push_back(e.increment);
        if (opts.format == Format::json) {
            json::Json result;
            result["partition"] = json::encode(lambda);
            result["d"] = lambda.size();
            result["l"] = lambda.length();
            result["profile"] = json::encode(profile);
            out << json::envelope("hooks", params, true, std::move(result)).dump(2) << "\n";
        } else if (opts.format == Format::csv) {
            out << "hook,leg,increment\n";
            for (const auto& e : profile.entries)
                out << e.hook << "," << e.leg << "," << e.increment << "\n";
        } else {
            out << "partition " << lambda.str() << "  d=" << lambda.size() << " l=" << lambda.length() << "\n";
            out << "hooks/legs:";
            for (const auto& e : profile.entries)
                out << " (" << e.hook << "," << e.leg << ")";
            out << "\nincrements: " << detail::join_ints(increments, ",") << "\n";
        }
        return exit_ok;
    });
}

inline int cmd_tmatrix(std::int64_t d, std::int64_t l, BasisKind basis, const Options& opts, std::ostream& out,
                       std::ostream& err)
{
    auto params = detail::bidegree_params(d, l);
    params["basis"] = to_string(basis);
    return detail::guarded("tmatrix", params, opts, out, err, [&] {
        detail::check_bidegree(d, l);
        detail::check_dimension(d, l, opts);
        const auto m = t_matrix(d, l, basis);
        const std::size_t n = m.values.rows();
        if (opts.format == Format::json) {
            out << json::envelope("tmatrix", params, true, json::encode(m)).dump(2) << "\n";
        } else if (opts.format == Format::csv) {
            out << "row";
            for (const auto& label : m.labels)
                out << "," << detail::csv_quote(label);
            out << "\n";
            for (std::size_t r = 0; r < n; ++r) {
                out << detail::csv_quote(m.labels[r]);
                for (std::size_t c = 0; c < n; ++c)
                    out << "," << to_short_string(m.values(r, c));
                out << "\n";
            }
        } else {
            out << "T on F(" << d << "," << l << "), " << (basis == BasisKind::monomial ? "monomial basis" : "basis S(" + std::to_string(d) + "," + std::to_string(l) + ")") << ", column j = T(basis_j)\n";
            std::size_t label_width = 0, cell_width = 1;
            for (const auto& label : m.labels)
                label_width = std::max(label_width, label.size());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    cell_width = std::max(cell_width, to_short_string(m.values(r, c)).size());
            for (std::size_t r = 0; r < n; ++r) {
                out << std::left << std::setw(int(label_width)) << m.labels[r] << std::right << " |";
                for (std::size_t c = 0; c < n; ++c)
                    out << " " << std::setw(int(cell_width)) << to_short_string(m.values(r, c));
                out << "\n";
            }
        }
        return exit_ok;
    });
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline const std::vector<std::string>& verify_check_names()
{
    static const std::vector<std::string> names{
        "dimension", "triangularity", "spectrum-consistency", "self-adjointness",
        "dominance", "zero-law", "structural-agreement", "algiden-residual",
    };
    return names;
}

// All checks for one bidegree; results keyed by check index.
inline std::vector<CheckResult> verify_bidegree(std::int64_t d, std::int64_t l)
{
    const auto& names = verify_check_names();
    std::vector<CheckResult> results(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        results[i].name = names[i];
    const std::string where = "F(" + std::to_string(d) + "," + std::to_string(l) + ")";

    auto run = [&](std::size_t index, auto&& check) {
        ++results[index].cases;
        try {
            std::string failure = check();
            if (!failure.empty())
                results[index].failures.push_back(where + ": " + failure);
        } catch (const std::exception& e) {
            results[index].failures.push_back(where + ": " + e.what());
        }
    };

    run(0, [&]() -> std::string {
        const auto p = count_partitions(d, l);
        if (s_basis(d, l).size() != p || monomial_basis(d, l).size() != p)
            return "basis sizes differ from p(d,l) = " + std::to_string(p);
        if (rank(gbasis_data(d, l)->expansion) != p)
            return "expansion matrix is singular";
        return {};
    });
    run(1, [&]() -> std::string {
        return verify_triangular(d, l).upper_triangular ? "" : "gbasis matrix is not upper triangular";
    });
    run(2, [&]() -> std::string {
        const auto report = spectrum(d, l, false); // throws on formula/diagonal mismatch
        for (auto v : report.eigenvalues())
            if (v < 0)
                return "negative eigenvalue " + std::to_string(v);
        if (!char_poly_check(d, l))
            return "characteristic polynomial disagrees with the spectrum";
        return {};
    });
    run(3, [&]() -> std::string { return verify_self_adjoint(d, l) ? "" : "M^T G != G M"; });
    run(4, [&]() -> std::string {
        const auto dom = dominant_eigenvalue(d, l);
        const auto g = g_poly(d, l);
        if (apply_T(g) != g * Rational(dom))
            return "g(d,l) is not an eigenfunction for " + std::to_string(dom);
        if (spectrum(d, l, false).dominant != dom)
            return "spectrum maximum differs from " + std::to_string(dom);
        return {};
    });
    run(5, [&]() -> std::string {
        return spectrum(d, l, false).has_zero == has_zero_eigenvalue(d, l) ? "" : "zero law violated";
    });
    run(6, [&]() -> std::string {
        for (const auto& p : ordered_products(d, l))
            if (expand(apply_T_structural(p)) != apply_T(g_product_expand(p)))
                return "mismatch on " + p.str();
        return {};
    });
    if (d % 2 == 1 && l % 2 == 0) {
        const std::int64_t n = (d - 1) / 2, m = l / 2;
        for (std::int64_t p = 1; p <= m; ++p)
            for (std::int64_t lp = 2 * p - 1; lp <= 2 * m - 1; ++lp)
                run(7, [&]() -> std::string {
                    auto r = algiden_residual(n, m, p, lp);
                    return r.is_zero() ? "" : "nonzero residual for p=" + std::to_string(p) + " l'=" + std::to_string(lp);
                });
    }
    return results;
}

} // namespace detail

/// Runs every invariant check for all 1 <= l <= d <= max_d. Bidegrees are
/// processed concurrently and merged in (d, l) order.
inline std::vector<CheckResult> run_verify(std::int64_t max_d)
{
    std::vector<std::future<std::vector<std::vector<CheckResult>>>> jobs;
    for (std::int64_t d = 1; d <= max_d; ++d)
        jobs.push_back(std::async(std::launch::async, [d] {
            std::vector<std::vector<CheckResult>> per_l;
            for (std::int64_t l = 1; l <= d; ++l)
                per_l.push_back(detail::verify_bidegree(d, l));
            return per_l;
        }));

    const auto& names = detail::verify_check_names();
    std::vector<CheckResult> merged(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        merged[i].name = names[i];
    for (auto& job : jobs)
        for (const auto& per_check : job.get())
            for (std::size_t i = 0; i < per_check.size(); ++i) {
                merged[i].cases += per_check[i].cases;
                merged[i].failures.insert(merged[i].failures.end(), per_check[i].failures.begin(),
                                          per_check[i].failures.end());
            }

    if (max_d >= 12) {
        CheckResult reference{"reference-spectrum-F(12,4)", 1, {}};
        try {
            if (spectrum(12, 4, false).eigenvalues() != reference_spectrum_12_4())
                reference.failures.push_back("F(12,4): spectrum differs from the reference list");
        } catch (const std::exception& e) {
            reference.failures.push_back(std::string("F(12,4): ") + e.what());
        }
        merged.push_back(std::move(reference));
    }
    return merged;
}

inline int cmd_verify(std::int64_t max_d, const Options& opts, std::ostream& out, std::ostream& err)
{
    json::Json params;
    params["max_d"] = max_d;
    return detail::guarded("verify", params, opts, out, err, [&] {
        if (max_d < 1)
            throw usage_error("--max-d must be >= 1");
        for (std::int64_t l = 1; l <= max_d; ++l)
            detail::check_dimension(max_d, l, opts);
        const auto results = run_verify(max_d);
        bool all = true;
        for (const auto& r : results)
            all = all && r.passed();
        if (opts.format == Format::json) {
            json::Json checks = json::Json::array();
            for (const auto& r : results) {
                json::Json c;
                c["name"] = r.name;
                c["cases"] = r.cases;
                c["passed"] = r.passed();
                c["failures"] = r.failures;
                checks.push_back(std::move(c));
            }
            json::Json result;
            result["max_d"] = max_d;
            result["checks"] = std::move(checks);
            out << json::envelope("verify", params, all, std::move(result), all ? "" : "one or more checks failed")
                       .dump(2)
                << "\n";
        } else if (opts.format == Format::csv) {
            out << "check,cases,status\n";
            for (const auto& r : results)
                out << r.name << "," << r.cases << "," << (r.passed() ? "pass" : "fail") << "\n";
        } else {
            for (const auto& r : results) {
                out << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(30) << r.name << std::right
                    << r.cases << " cases\n";
                for (const auto& f : r.failures)
                    out << "      " << f << "\n";
            }
            out << (all ? "all checks passed" : "verification FAILED") << " (max d = " << max_d << ")\n";
        }
        return all ? exit_ok : exit_failure;
    });
}

} // namespace bihom::cli
