// Batch front door: identity verification, kinetic Monte Carlo, current
// moments, and the large-deviation tables, with seeded reproducible runs.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "asepqj/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"asepqj: exclusion-process simulator and exact-verification toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; flags override");

    asepqj::RunConfig cfg;
    bool seed_flag = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "asymmetry parameter in (0,1]")->capture_default_str();
        sub->add_option("--two-j", cfg.two_j, "maximum occupancy 2j")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "master seed (fallback: ASEPQJ_SEED)")
            ->each([&](const std::string&) { seed_flag = true; });
        sub->add_option("--out", cfg.out, "CSV output path");
        sub->add_option("--workers", cfg.workers, "worker threads (0 = machine parallelism)");
        sub->add_option("--dim-cap", cfg.dim_cap, "state-space dimension cap")
            ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "run the algebraic identity suite");
    add_common(verify);
    verify->add_option("--length", cfg.length, "chain length L")->capture_default_str();
    verify->add_option("--alpha", cfg.alpha, "reversible-family parameter")
        ->capture_default_str();
    verify->add_option("--tol-scale", cfg.tol_scale, "tolerance multiplier")
        ->capture_default_str();
    verify->add_option("--corrupt-rate", cfg.corrupt_rate)->group("");  // negative-control hook

    CLI::App* simulate = app.add_subcommand("simulate", "kinetic Monte Carlo trajectories");
    add_common(simulate);
    cfg.trajectories = 10;
    simulate->add_option("--length", cfg.length, "chain length L (closed/periodic)")
        ->capture_default_str();
    simulate->add_option("--window", cfg.window, "half-width of the truncated-line window");
    simulate->add_option("--boundary", cfg.boundary, "closed | periodic | truncated-line")
        ->capture_default_str();
    simulate->add_option("--time", cfg.time, "evolution horizon")->capture_default_str();
    simulate->add_option("--trajectories", cfg.trajectories, "number of runs")
        ->capture_default_str();
    simulate->add_option("--initial", cfg.initial, "step+ | step- | product | half")
        ->capture_default_str();
    simulate->add_option("--mu", cfg.mu, "product-measure weights (comma separated)")
        ->delimiter(',');

    CLI::App* moment = app.add_subcommand("moment", "current q-moments: MC vs closed form");
    add_common(moment);
    moment->add_option("--initial", cfg.initial, "step+ | step- | product")
        ->capture_default_str();
    moment->add_option("--mu", cfg.mu, "product-measure weights")->delimiter(',');
    moment->add_option("--bonds", cfg.bonds, "bond locations i for J_i")->delimiter(',');
    moment->add_option("--times", cfg.times, "observation times")->delimiter(',');
    moment->add_option("--trajectories", cfg.trajectories, "Monte Carlo sample size")
        ->capture_default_str();
    moment->add_option("--window", cfg.window, "override the automatic window half-width");

    CLI::App* ldp = app.add_subcommand("ldp", "rate function and moment growth tables");
    add_common(ldp);
    ldp->add_option("--mu", cfg.mu, "product-measure weights")->delimiter(',');
    ldp->add_option("--grid-points", cfg.grid_points, "x-grid size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : asepqj::kExitBadInput;
    }

    cfg.seed_set = seed_flag;
    try {
        if (*verify) return asepqj::cmd_verify(cfg);
        if (*simulate) return asepqj::cmd_simulate(cfg);
        if (*moment) return asepqj::cmd_moment(cfg);
        if (*ldp) return asepqj::cmd_ldp(cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return asepqj::kExitBadInput;
    } catch (const std::length_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return asepqj::kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return asepqj::kExitBadInput;
    }
    return asepqj::kExitBadInput;
}
