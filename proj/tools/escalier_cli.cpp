#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "escalier/jobs.hpp"

namespace {

void add_io_options(CLI::App* cmd, escalier::JobConfig& config) {
    cmd->add_option("-i,--input", config.input_path, "points file (JSON or CSV), - for stdin")
        ->required();
    cmd->add_option("--format", config.format, "input format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--field", config.field_override, "field: rational or fp:<p>");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental lex Groebner escalier, separators and multiplication matrices "
                 "for finite point sets"};
    app.require_subcommand(1);

    escalier::JobConfig config;

    auto* esc = app.add_subcommand("escalier", "escalier, correspondence, matrix M and bar code");
    add_io_options(esc, config);
    esc->callback([&] {
        config.mode = escalier::JobConfig::Mode::Run;
        config.outputs = {"escalier", "correspondence", "barcode", "starset"};
    });

    auto* sep = app.add_subcommand("separators", "squarefree separator polynomials");
    add_io_options(sep, config);
    sep->callback([&] {
        config.mode = escalier::JobConfig::Mode::Run;
        config.outputs = {"separators"};
    });

    auto* mat = app.add_subcommand("matrices", "evaluation, inverse and multiplication matrices");
    add_io_options(mat, config);
    mat->add_flag("--check", config.check, "also emit the residuals of the exact identities");
    mat->callback([&] {
        config.mode = escalier::JobConfig::Mode::Run;
        config.outputs = {"matrices"};
    });

    auto* gb = app.add_subcommand("groebner", "reduced lex basis of the vanishing ideal");
    add_io_options(gb, config);
    gb->callback([&] {
        config.mode = escalier::JobConfig::Mode::Run;
        config.outputs = {"groebner", "escalier", "starset"};
    });

    auto* ver = app.add_subcommand("verify", "run every cross-module invariant on the input");
    add_io_options(ver, config);
    ver->callback([&] { config.mode = escalier::JobConfig::Mode::Verify; });

    auto* bench = app.add_subcommand("bench", "operation-count and wall-time measurements");
    bench->add_option("--sizes", config.bench_sizes, "point counts to run");
    bench->add_option("-n,--nvars", config.bench_nvars, "number of variables");
    bench->add_option("--coord-range", config.bench_coord_range, "coordinate range (rationals)");
    bench->add_option("--seed", config.seed, "generator seed");
    bench->add_option("--field", config.field_override, "field: rational or fp:<p>");
    bench->callback([&] { config.mode = escalier::JobConfig::Mode::Bench; });

    auto* exp = app.add_subcommand("export-state", "run and dump the full session state");
    add_io_options(exp, config);
    exp->callback([&] { config.mode = escalier::JobConfig::Mode::ExportState; });

    auto* res = app.add_subcommand("resume", "append points to an exported state");
    res->add_option("--state", config.state_path, "state JSON produced by export-state")->required();
    add_io_options(res, config);
    res->callback([&] { config.mode = escalier::JobConfig::Mode::Resume; });

    CLI11_PARSE(app, argc, argv);
    return escalier::run_job(config, std::cout, std::cerr);
}
