#pragma once

#include <cstdint>
#include <vector>

#include "asepqj/generator.hpp"
#include "asepqj/qparams.hpp"
#include "asepqj/rng.hpp"

namespace asepqj {

struct TrajectoryEvent {
    double time;
    std::int64_t bond;  // left site of the bond (s, s+1); Periodic wrap uses s = last
    int dir;            // +1 particle moved right, -1 left
};

struct Trajectory {
    Configuration initial;
    std::vector<TrajectoryEvent> events;
    double final_time = 0.0;
};

// Signed crossing counts per bond; J_i (the current through bond (i-1, i))
// is the count of the bond with left site i-1.
struct CurrentRecord {
    Window window;
    bool periodic = false;
    std::vector<std::int64_t> crossings;

    std::int64_t bond_count() const { return static_cast<std::int64_t>(crossings.size()); }
    std::int64_t current_at(std::int64_t i) const;  // J_i, bond (i-1, i)
};

struct EvolveResult {
    Trajectory trajectory;
    Configuration final_config;
    CurrentRecord currents;
    bool contaminated = false;  // TruncatedLine: activity touched the outermost bonds
};

// Step profiles eta^+ (empty left of 0, full from 0) and eta^- (mirrored),
// restricted to a window that must contain site 0.
Configuration step_initial(int sign, const Window& window, const QParams& params);

// i.i.d. occupations with one-site law mu.
Configuration sample_product_initial(const std::vector<double>& mu, const Window& window,
                                     const QParams& params, RngStream& rng);

// Exact Gillespie evolution up to t_end with per-bond current tracking.
EvolveResult evolve(const Configuration& cfg, double t_end, const QParams& params,
                    BoundaryKind boundary, RngStream& rng, bool record_events = true);

// Endpoint of the dual walker at time t (exact: Skellam draw).
std::int64_t walker_simulate(std::int64_t i0, double t, const QParams& params, RngStream& rng);

struct InitialSpec {
    enum Kind { StepPlus, StepMinus, Product } kind = StepPlus;
    std::vector<double> mu;  // Product only

    static InitialSpec step(int sign) { return {sign > 0 ? StepPlus : StepMinus, {}}; }
    static InitialSpec product(std::vector<double> m) { return {Product, std::move(m)}; }
};

struct MomentEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::uint64_t contaminated_runs = 0;  // trajectories still flagged after retries
};

// Monte Carlo estimate of E[q^{2 J_i(t)}] on an emulated infinite line for a
// grid of bonds x times (times ascending). One trajectory set serves the whole
// grid; reduction is in trajectory order, so results are byte-stable for any
// worker count. Contaminated runs are retried on a doubled window with a
// fresh substream.
std::vector<std::vector<MomentEstimate>> q_current_moment_mc_grid(
    const InitialSpec& initial, const QParams& params, const std::vector<std::int64_t>& bonds,
    const std::vector<double>& times, std::uint64_t n_traj, std::uint64_t master_seed,
    int workers = 1, std::int64_t window_halfwidth = 0 /* 0 = auto */);

MomentEstimate q_current_moment_mc(const InitialSpec& initial, const QParams& params,
                                   std::int64_t i, double t, std::uint64_t n_traj,
                                   std::uint64_t master_seed, int workers = 1);

// Window half-width used to emulate Z: |i| + ceil(4 q^{-2j} [2j]_q t) + 8.
std::int64_t truncation_halfwidth(std::int64_t max_abs_bond, double t, const QParams& params);

}  // namespace asepqj
