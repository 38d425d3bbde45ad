#include "asepqj/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "asepqj/algebra.hpp"
#include "asepqj/ldp.hpp"
#include "asepqj/report.hpp"
#include "asepqj/simulate.hpp"
#include "asepqj/verify.hpp"
#include "asepqj/walker.hpp"

namespace asepqj {

namespace {

BoundaryKind parse_boundary(const std::string& s) {
    if (s == "closed") return BoundaryKind::Closed;
    if (s == "periodic") return BoundaryKind::Periodic;
    if (s == "truncated-line" || s == "line") return BoundaryKind::TruncatedLine;
    throw std::domain_error("unknown boundary: " + s);
}

InitialSpec parse_initial(const RunConfig& cfg) {
    if (cfg.initial == "step+") return InitialSpec::step(+1);
    if (cfg.initial == "step-") return InitialSpec::step(-1);
    if (cfg.initial == "product") {
        if (cfg.mu.empty()) throw std::domain_error("product initial needs --mu weights");
        return InitialSpec::product(cfg.mu);
    }
    throw std::domain_error("unknown initial condition: " + cfg.initial);
}

std::vector<double> normalized_mu(const RunConfig& cfg, const QParams& params) {
    std::vector<double> mu = cfg.mu;
    if (mu.empty()) throw std::domain_error("--mu weights are required");
    if (static_cast<int>(mu.size()) != params.local_dim())
        throw std::domain_error("--mu needs exactly 2j+1 weights");
    double s = 0.0;
    for (double v : mu) {
        if (v < 0.0) throw std::domain_error("--mu weights must be nonnegative");
        s += v;
    }
    if (s <= 0.0) throw std::domain_error("--mu weights must not all vanish");
    for (double& v : mu) v /= s;
    return mu;
}

void emit(const RunConfig& cfg, const Table& table, bool table_to_stdout) {
    if (table_to_stdout) std::cout << table.to_text();
    if (!cfg.out.empty()) write_file(cfg.out, table.to_csv());
}

}  // namespace

void finalize_config(RunConfig& cfg) {
    if (!cfg.seed_set) {
        if (const char* env = std::getenv("ASEPQJ_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
    }
    if (cfg.workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        cfg.workers = hw == 0 ? 1 : static_cast<int>(hw);
    }
}

int cmd_verify(RunConfig cfg) {
    finalize_config(cfg);
    const QParams params(cfg.q, cfg.two_j);
    check_dim_cap(params, cfg.length, cfg.dim_cap);
    VerifyOptions opts;
    opts.tol_scale = cfg.tol_scale;
    opts.alpha = cfg.alpha;
    opts.dim_cap = cfg.dim_cap;
    opts.rate_corruption = cfg.corrupt_rate;
    const VerifyReport rep = run_verify_suite(params, cfg.length, opts);
    emit(cfg, rep.table(), true);
    if (!rep.all_pass) {
        for (const VerifyRow& r : rep.rows)
            if (!r.pass) std::cout << "FAILED: " << r.name << " (" << r.relation << ")\n";
        return kExitVerifyFailed;
    }
    std::cout << "all identities pass\n";
    return kExitOk;
}

int cmd_simulate(RunConfig cfg) {
    finalize_config(cfg);
    const QParams params(cfg.q, cfg.two_j);
    const BoundaryKind boundary = parse_boundary(cfg.boundary);

    Window window(1, cfg.length);
    if (boundary == BoundaryKind::TruncatedLine) {
        const std::int64_t hw = cfg.window > 0
                                    ? cfg.window
                                    : truncation_halfwidth(1, cfg.time, params);
        window = Window(-hw, hw);
    }

    Table table;
    table.header = {"traj", "events", "final_time", "total_particles", "current_mid",
                    "contaminated"};
    const std::int64_t mid =
        boundary == BoundaryKind::TruncatedLine ? 0 : window.first + window.size() / 2;
    bool any_contam = false;
    for (std::uint64_t id = 0; id < cfg.trajectories; ++id) {
        RngStream rng(cfg.seed, id);
        Configuration start;
        if (cfg.initial == "product") {
            start = sample_product_initial(normalized_mu(cfg, params), window, params, rng);
        } else if (boundary == BoundaryKind::TruncatedLine) {
            start = step_initial(cfg.initial == "step-" ? -1 : +1, window, params);
        } else {
            // closed/periodic default: alternating half filling
            std::vector<int> occ(static_cast<std::size_t>(window.size()), 0);
            for (std::size_t p = 0; p < occ.size(); p += 2) occ[p] = params.two_j;
            start = Configuration(window, occ);
        }
        const EvolveResult res = evolve(start, cfg.time, params, boundary, rng);
        any_contam = any_contam || res.contaminated;
        table.rows.push_back({std::to_string(id), std::to_string(res.trajectory.events.size()),
                              format_double(res.trajectory.final_time),
                              std::to_string(res.final_config.total()),
                              std::to_string(res.currents.current_at(mid)),
                              res.contaminated ? "1" : "0"});
    }
    emit(cfg, table, cfg.out.empty());
    return any_contam ? kExitContaminated : kExitOk;
}

int cmd_moment(RunConfig cfg) {
    finalize_config(cfg);
    const QParams params(cfg.q, cfg.two_j);
    if (cfg.initial == "product") cfg.mu = normalized_mu(cfg, params);
    const InitialSpec initial = parse_initial(cfg);
    const auto grid =
        q_current_moment_mc_grid(initial, params, cfg.bonds, cfg.times, cfg.trajectories,
                                 cfg.seed, cfg.workers, cfg.window);
    Table table;
    table.header = {"i", "t", "mc_estimate", "mc_stderr", "closed_form", "abs_diff",
                    "sigma_ratio", "flagged"};
    bool any_flagged = false;
    for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
        for (std::size_t bi = 0; bi < cfg.bonds.size(); ++bi) {
            const MomentEstimate& est = grid[ti][bi];
            double closed;
            switch (initial.kind) {
                case InitialSpec::StepPlus:
                    closed = moment_step(+1, cfg.bonds[bi], cfg.times[ti], params);
                    break;
                case InitialSpec::StepMinus:
                    closed = moment_step(-1, cfg.bonds[bi], cfg.times[ti], params);
                    break;
                default:
                    closed = moment_product(initial.mu, cfg.times[ti], params);
            }
            const double diff = std::fabs(est.estimate - closed);
            const double sigma = est.stderr_ > 0.0 ? diff / est.stderr_ : (diff == 0.0 ? 0.0 : 1e300);
            const bool flagged = est.contaminated_runs > 0;
            any_flagged = any_flagged || flagged;
            table.rows.push_back({std::to_string(cfg.bonds[bi]), format_double(cfg.times[ti]),
                                  format_double(est.estimate), format_double(est.stderr_),
                                  format_double(closed), format_double(diff),
                                  format_double(sigma), flagged ? "1" : "0"});
        }
    }
    emit(cfg, table, cfg.out.empty());
    return any_flagged ? kExitContaminated : kExitOk;
}

int cmd_ldp(RunConfig cfg) {
    finalize_config(cfg);
    const QParams params(cfg.q, cfg.two_j);
    const std::vector<double> mu = normalized_mu(cfg, params);
    const WalkerLaw law(params);

    Table table;
    table.header = {"x", "rate_I", "rate_I_numeric", "abs_diff"};
    const double xmax = law.drift() + 8.0;
    const int n = cfg.grid_points;
    for (int k = 0; k < n; ++k) {
        const double x = xmax * static_cast<double>(k) / static_cast<double>(n - 1);
        const double a = ldp_rate(x, params);
        const double b = ldp_rate_numeric(x, params);
        table.rows.push_back({format_double(x), format_double(a), format_double(b),
                              format_double(std::fabs(a - b))});
    }
    table.rows.push_back({"summary.M_q", format_double(growth_rate_base(mu, params)), "", ""});
    table.rows.push_back({"summary.growth_rate", format_double(growth_rate(mu, params)), "", ""});
    emit(cfg, table, cfg.out.empty());
    return kExitOk;
}

}  // namespace asepqj
