#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using derivsamp::cli::RunConfig;
    RunConfig cfg;
    CLI::App app{"Derivative sampling in spline spaces"};
    app.require_subcommand(1);

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output CSV path (default stdout)");
        sub->add_option("--tol", cfg.tol, "certificate tolerance");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--grid-n", cfg.grid_n, "frame-bound grid size");
    };
    const auto add_kappa = [&cfg](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "spline order");
        sub->add_option("--a", cfg.a, "shift as p/q");
        sub->add_option("--rho", cfg.rho, "multiplicity");
    };
    const auto add_signal = [&cfg](CLI::App* sub) {
        sub->add_option("--signal", cfg.signal, "catalog signal id");
        sub->add_option("--signal-csv", cfg.signal_csv, "tabulated signal: t,f,f1,... (nearest-node sampling)");
        sub->add_option("--deriv", cfg.deriv, "use this derivative of the signal");
        sub->add_option("--p", cfg.p, "norm exponent");
    };

    auto* tables = app.add_subcommand("tables", "exact determinant polynomials for rho = 2, m = 3..9");
    add_common(tables);
    auto* check = app.add_subcommand("check", "CIS certificate and frame bounds");
    add_kappa(check);
    add_common(check);
    auto* dump = app.add_subcommand("kernel-dump", "Fourier coefficients of the inverse symbol");
    add_kappa(dump);
    add_common(dump);
    auto* approx = app.add_subcommand("approx", "L^p error of S_W f over a W sweep");
    add_kappa(approx);
    add_signal(approx);
    add_common(approx);
    approx->add_option("--W", cfg.W, "dilations, e.g. 4,8 or 3*sqrt(7)")->delimiter(',');
    auto* tau = app.add_subcommand("tau", "tau-modulus over a delta sweep");
    add_signal(tau);
    add_common(tau);
    tau->add_option("--r", cfg.r, "difference order");
    tau->add_option("--delta", cfg.delta, "delta values")->delimiter(',');
    auto* scan = app.add_subcommand("scan", "Assumption-1 audit");
    add_common(scan);
    scan->add_option("--m-max", cfg.m_max, "largest spline order");
    scan->add_option("--rho-max", cfg.rho_max, "largest multiplicity");
    auto* bounds = app.add_subcommand("bounds", "frame bounds and a random check of the sampling inequality");
    add_kappa(bounds);
    add_common(bounds);
    bounds->add_option("--trials", cfg.trials, "random spline elements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : derivsamp::cli::kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return derivsamp::cli::run(cfg, std::cout, std::cerr);
}
