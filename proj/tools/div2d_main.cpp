// Command-line front door for the two-dimensional divisor toolkit.
//
//   div2d verify   [--tol T]                       run every identity suite
//   div2d scan     --target NAME [options]         residual-decay scan table
//   div2d tabulate --what NAME [options]           value tables / constants
//
// Exit codes: 0 all checks pass, 1 identity breach, 2 usage/config error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "div2d/report.hpp"

namespace {

struct Cli {
    std::string pair = "1,2";
    double xmax = 1e6;
    double xmin = 10.0;
    std::string grid = "decade";
    std::vector<double> grid_points;
    std::uint64_t trunc = 10000;
    double tol = 1e-8;
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;
};

div2d::DivisorPair parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--pair expects a,b");
    int a = std::stoi(s.substr(0, comma));
    int b = std::stoi(s.substr(comma + 1));
    return div2d::DivisorPair(a, b);  // validates ordering and coprimality
}

div2d::RunConfig to_config(const Cli& c) {
    div2d::RunConfig cfg;
    cfg.pair = parse_pair(c.pair);
    cfg.x_max = c.xmax;
    cfg.x_min = c.xmin;
    if (c.grid == "decade")
        cfg.grid = div2d::RunConfig::Grid::Decade;
    else if (c.grid == "linear")
        cfg.grid = div2d::RunConfig::Grid::Linear;
    else if (c.grid == "explicit")
        cfg.grid = div2d::RunConfig::Grid::Explicit;
    else
        throw std::invalid_argument("--grid must be decade|linear|explicit");
    cfg.explicit_grid = c.grid_points;
    cfg.trunc_n = c.trunc;
    cfg.tol = c.tol;
    if (c.format == "csv")
        cfg.format = div2d::RunConfig::Format::Csv;
    else if (c.format == "json")
        cfg.format = div2d::RunConfig::Format::Json;
    else
        throw std::invalid_argument("--format must be csv|json");
    cfg.out_path = c.out;
    cfg.threads = c.threads == 0 ? 1 : c.threads;
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* app, Cli& c) {
    app->add_option("--pair", c.pair, "exponent pair a,b (1 <= a <= b, coprime)");
    app->add_option("--xmax", c.xmax, "scan upper limit");
    app->add_option("--xmin", c.xmin, "scan lower limit");
    app->add_option("--grid", c.grid, "decade|linear|explicit");
    app->add_option("--grid-points", c.grid_points,
                    "points for --grid explicit (may be empty)");
    app->add_option("--trunc", c.trunc, "oscillating-series truncation order");
    app->add_option("--tol", c.tol, "identity tolerance");
    app->add_option("--format", c.format, "csv|json");
    app->add_option("--out", c.out, "output path (default stdout)");
    app->add_option("--threads", c.threads, "worker threads (deterministic output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-dimensional divisor problem toolkit"};
    app.require_subcommand(1);
    Cli c;

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
    add_common(verify, c);

    std::string target;
    CLI::App* scan = app.add_subcommand("scan", "residual-decay scan");
    scan->add_option("--target", target,
                     "theorem1|theorem2|corollary1|corollary2|first_moment|voronoi")
        ->required();
    add_common(scan, c);

    std::string what;
    CLI::App* tab = app.add_subcommand("tabulate", "value tables");
    tab->add_option("--what", what, "delta|dcount|g_series|constants")->required();
    add_common(tab, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        div2d::ZetaContext ctx;
        div2d::RunConfig cfg = to_config(c);

        if (app.got_subcommand(verify)) {
            auto checks = div2d::run_verify(ctx, cfg);
            bool all_pass = true;
            for (const auto& r : checks) {
                std::printf("%-44s residual %13.6e  tol %g  %s\n", r.name.c_str(),
                            r.residual, r.tol, r.pass ? "pass" : "FAIL");
                all_pass = all_pass && r.pass;
            }
            if (!all_pass) {
                for (const auto& r : checks)
                    if (!r.pass)
                        std::fprintf(stderr, "failed: %s (residual %.6e > tol %g)\n",
                                     r.name.c_str(), r.residual, r.tol);
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(scan)) {
            auto rep = div2d::run_scan(ctx, cfg, div2d::parse_target(target));
            div2d::write_report(rep, cfg);
            return 0;
        }
        if (app.got_subcommand(tab)) {
            auto rep = div2d::run_tabulate(ctx, cfg, what);
            div2d::write_report(rep, cfg);
            return 0;
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
