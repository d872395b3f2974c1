// Command-line front end: measure computation, dynamic curves, plug-in
// estimation from CSV samples, stochastic-order checks, characterization
// screens, the inequality verification report, and Monte Carlo cross-checks.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "extropy/cli.hpp"

namespace {

using extropy::cli::Command;
using extropy::cli::OutputFormat;
using extropy::cli::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& format, std::string& t_grid) {
    cmd->add_option("--weight", cfg.weight, "weight spec, e.g. const:1, identity, pow:m=2, log");
    cmd->add_option("--n", cfg.n, "sample size of the extreme order statistic");
    cmd->add_option("--output", cfg.output, "write the result to this path (atomic)");
    cmd->add_option("--format", format, "json | csv | text");
    cmd->add_option("--seed", cfg.seed, "rng seed for stochastic commands");
    cmd->add_option("--rel-tol", cfg.rel_tol, "relative tolerance override");
    cmd->add_option("--abs-tol", cfg.abs_tol, "absolute tolerance override");
    cmd->add_option("--t-grid", t_grid, "time grid as count:lo:hi quantiles (default 33:0.01:0.99)");
}

int finish(const RunConfig& cfg) {
    const auto outcome = extropy::cli::run(cfg);
    if (cfg.output.empty() || outcome.exit_code == 1) std::fputs(outcome.output.c_str(), stdout);
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted cumulative residual/past extropy toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string t_grid;
    std::string n_sequence;

    auto* measure = app.add_subcommand("measure", "static measure of an extreme order statistic");
    measure->add_option("--dist", cfg.dist, "distribution spec, e.g. pareto2:k=1,h=2")->required();
    measure->add_option("--kind", cfg.kind,
                        "residual-min | past-max | mu-w | cpe-entropy | gmd (default residual-min)");
    add_common_flags(measure, cfg, format, t_grid);

    auto* dynamic = app.add_subcommand("dynamic", "dynamic measure curve over a time grid");
    dynamic->add_option("--dist", cfg.dist, "distribution spec")->required();
    dynamic->add_option("--kind", cfg.kind, "residual-min | past-max | residual-kn");
    dynamic->add_option("--k", cfg.k, "order statistic index for residual-kn");
    add_common_flags(dynamic, cfg, format, t_grid);

    auto* estimate = app.add_subcommand("estimate", "plug-in estimate from a CSV sample");
    estimate->add_option("--input", cfg.input, "CSV file, one value per line")->required();
    estimate->add_option("--kind", cfg.kind, "residual-min | past-max");
    estimate->add_option("--bootstrap", cfg.bootstrap, "percentile bootstrap replicates (>= 100)");
    estimate->add_option("--level", cfg.level, "bootstrap confidence level (default 0.95)");
    add_common_flags(estimate, cfg, format, t_grid);

    auto* order = app.add_subcommand("order-check", "pointwise stochastic-order comparison");
    order->add_option("--kind", cfg.kind, "hazard | reversed-hazard | wdcrex | dcpwex")->required();
    order->add_option("--dist", cfg.dist, "first distribution")->required();
    order->add_option("--dist2", cfg.dist2, "second distribution")->required();
    add_common_flags(order, cfg, format, t_grid);

    auto* characterize = app.add_subcommand("characterize", "family characterization screens");
    characterize->add_option("target", cfg.kind, "gpd | power | location | location-scale")
        ->required();
    characterize->add_option("--dist", cfg.dist, "distribution under test")->required();
    characterize->add_option("--dist2", cfg.dist2, "second distribution (location screens)");
    characterize->add_option("--weight2", cfg.weight2, "weight for the second distribution");
    characterize->add_option("--n-sequence", n_sequence,
                             "comma-separated n values (default 1..12)");
    add_common_flags(characterize, cfg, format, t_grid);

    auto* verify = app.add_subcommand("verify", "run the inequality verification registry");
    add_common_flags(verify, cfg, format, t_grid);

    auto* mc = app.add_subcommand("mc", "Monte Carlo cross-check of a static measure");
    mc->add_option("--dist", cfg.dist, "distribution spec")->required();
    mc->add_option("--kind", cfg.kind, "residual-min | past-max");
    mc->add_option("--replicates", cfg.replicates, "sample size (default 100000)");
    add_common_flags(mc, cfg, format, t_grid);

    CLI11_PARSE(app, argc, argv);

    if (measure->parsed()) cfg.command = Command::measure;
    if (dynamic->parsed()) cfg.command = Command::dynamic;
    if (estimate->parsed()) cfg.command = Command::estimate;
    if (order->parsed()) cfg.command = Command::order_check;
    if (characterize->parsed()) cfg.command = Command::characterize;
    if (verify->parsed()) cfg.command = Command::verify;
    if (mc->parsed()) cfg.command = Command::mc;

    try {
        if (format == "json")
            cfg.format = OutputFormat::json_fmt;
        else if (format == "csv")
            cfg.format = OutputFormat::csv_fmt;
        else if (format == "text")
            cfg.format = OutputFormat::text_fmt;
        else
            throw extropy::Error(extropy::ErrorKind::invalid_config,
                                 "unknown format '" + format + "'");
        if (!t_grid.empty()) cfg.t_grid = extropy::cli::parse_t_grid(t_grid);
        if (!n_sequence.empty()) {
            for (const auto& part : extropy::cli::detail::split(n_sequence, ','))
                cfg.n_sequence.push_back(
                    static_cast<int>(extropy::cli::detail::parse_number(part, "n-sequence")));
        }
    } catch (const extropy::Error& err) {
        std::fprintf(stderr, "%s\n", err.what());
        return 1;
    }

    return finish(cfg);
}
