// bihom: command-line front end for the spectral computations on F(d, l).

#include <bihom/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    using namespace bihom;

    CLI::App app{"Exact spectrum of T on the bigraded components F(d,l) of the ring of symmetric functions"};
    app.require_subcommand(1);

    cli::Options opts;
    bool as_json = false, as_csv = false;
    app.add_flag("--json", as_json, "emit a JSON envelope");
    app.add_flag("--csv", as_csv, "emit CSV (matrices, spectra, tables)");
    app.add_option("--max-dim", opts.max_dim, "refuse spaces above this dimension")->capture_default_str();
    app.add_flag("--eigenvectors", opts.eigenvectors, "include eigenvectors in spectrum output");
    app.get_option("--json")->excludes("--csv");

    std::int64_t d = 0, l = 0, d2 = 0, l2 = 0;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of T on F(d,l) with their index sequences");
    spectrum_cmd->add_option("d", d)->required();
    spectrum_cmd->add_option("l", l)->required();

    auto* basis_cmd = app.add_subcommand("basis", "the basis S(d,l) with its Young diagrams");
    basis_cmd->add_option("d", d)->required();
    basis_cmd->add_option("l", l)->required();

    auto* gpoly_cmd = app.add_subcommand("gpoly", "g(d,l) in the x-coordinates");
    gpoly_cmd->add_option("d", d)->required();
    gpoly_cmd->add_option("l", l)->required();

    auto* straighten_cmd = app.add_subcommand("straighten", "rewrite g(d1,l1)g(d2,l2) through regular pairs");
    straighten_cmd->add_option("d1", d)->required();
    straighten_cmd->add_option("l1", l)->required();
    straighten_cmd->add_option("d2", d2)->required();
    straighten_cmd->add_option("l2", l2)->required();

    std::string partition;
    auto* hooks_cmd = app.add_subcommand("hooks", "hook numbers, leg numbers and leg increments of a diagram");
    hooks_cmd->add_option("partition", partition, "comma-separated, e.g. 7,7,5,4,3,2")->required();

    std::string basis_name = "gbasis";
    auto* tmatrix_cmd = app.add_subcommand("tmatrix", "matrix of T on F(d,l)");
    tmatrix_cmd->add_option("d", d)->required();
    tmatrix_cmd->add_option("l", l)->required();
    tmatrix_cmd->add_option("--basis", basis_name)
        ->check(CLI::IsMember({"monomial", "gbasis"}))
        ->capture_default_str();

    std::int64_t max_d = 8;
    auto* verify_cmd = app.add_subcommand("verify", "run every invariant check for all l <= d <= max-d");
    verify_cmd->add_option("--max-d", max_d)->capture_default_str();

    // Global flags are also accepted after the subcommand.
    for (auto* sub : {spectrum_cmd, basis_cmd, gpoly_cmd, straighten_cmd, hooks_cmd, tmatrix_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_usage;
    }

    opts.format = as_json ? cli::Format::json : as_csv ? cli::Format::csv : cli::Format::table;
    auto& out = std::cout;
    auto& err = std::cerr;

    if (*spectrum_cmd)
        return cli::cmd_spectrum(d, l, opts, out, err);
    if (*basis_cmd)
        return cli::cmd_basis(d, l, opts, out, err);
    if (*gpoly_cmd)
        return cli::cmd_gpoly(d, l, opts, out, err);
    if (*straighten_cmd)
        return cli::cmd_straighten(d, l, d2, l2, opts, out, err);
    if (*hooks_cmd)
        return cli::cmd_hooks(partition, opts, out, err);
    if (*tmatrix_cmd)
        return cli::cmd_tmatrix(d, l, basis_name == "monomial" ? BasisKind::monomial : BasisKind::gbasis, opts, out,
                                err);
    if (*verify_cmd)
        return cli::cmd_verify(max_d, opts, out, err);
    return cli::exit_usage;
}
