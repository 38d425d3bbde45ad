#include "asepqj/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "asepqj/fenwick.hpp"
#include "asepqj/qcalc.hpp"
#include "asepqj/walker.hpp"

namespace asepqj {

std::int64_t CurrentRecord::current_at(std::int64_t i) const {
    const std::int64_t s = i - 1;  // left site of bond (i-1, i)
    if (periodic) {
        if (!window.contains(i)) throw std::domain_error("current_at: site outside torus");
        const std::int64_t b = (s < window.first ? window.last : s) - window.first;
        return crossings[static_cast<std::size_t>(b)];
    }
    if (s < window.first || i > window.last)
        throw std::domain_error("current_at: bond outside window");
    return crossings[static_cast<std::size_t>(s - window.first)];
}

Configuration step_initial(int sign, const Window& window, const QParams& params) {
    if (!window.contains(0)) throw std::domain_error("step_initial: window must contain site 0");
    if (sign != 1 && sign != -1) throw std::domain_error("step_initial: sign must be +-1");
    Configuration cfg(window, std::vector<int>(static_cast<std::size_t>(window.size()), 0));
    for (std::int64_t s = window.first; s <= window.last; ++s) {
        const bool right_half = s >= 0;
        cfg.at_site(s) = (sign > 0) == right_half ? params.two_j : 0;
    }
    return cfg;
}

Configuration sample_product_initial(const std::vector<double>& mu, const Window& window,
                                     const QParams& params, RngStream& rng) {
    if (static_cast<int>(mu.size()) != params.local_dim())
        throw std::domain_error("sample_product_initial: measure must have 2j+1 entries");
    double s = 0.0;
    for (double p : mu) {
        if (p < 0.0) throw std::domain_error("sample_product_initial: negative weight");
        s += p;
    }
    if (std::fabs(s - 1.0) > 1e-12)
        throw std::domain_error("sample_product_initial: measure is not normalized");
    Configuration cfg(window, std::vector<int>(static_cast<std::size_t>(window.size()), 0));
    for (auto& occ : cfg.occ) {
        const double u = rng.uniform_pos();
        double acc = 0.0;
        int value = params.two_j;
        for (int n = 0; n < static_cast<int>(mu.size()); ++n) {
            acc += mu[n];
            if (u <= acc) {
                value = n;
                break;
            }
        }
        occ = value;
    }
    return cfg;
}

namespace {

// mutable Gillespie state shared by evolve() and the Monte Carlo engine
struct Gillespie {
    const QParams& params;
    BoundaryKind boundary;
    Window window;
    std::vector<int> occ;
    std::int64_t nb;
    FenwickTree rates;  // entries 2b (right) and 2b+1 (left) for bond b
    std::vector<std::int64_t> crossings;
    bool edge_touched = false;
    std::uint64_t events_since_rebuild = 0;

    Gillespie(const Configuration& cfg, const QParams& p, BoundaryKind b)
        : params(p),
          boundary(b),
          window(cfg.window),
          occ(cfg.occ),
          nb(b == BoundaryKind::Periodic ? cfg.window.size() : cfg.window.size() - 1),
          rates(static_cast<std::size_t>(2 * nb)),
          crossings(static_cast<std::size_t>(nb), 0) {
        if (b == BoundaryKind::Periodic && window.size() < 3)
            throw std::domain_error("evolve: periodic boundary needs L >= 3");
        if (nb < 1) throw std::domain_error("evolve: need at least one bond");
        for (std::int64_t b2 = 0; b2 < nb; ++b2) refresh_bond(b2);
        rates.rebuild();
    }

    int site_occ(std::int64_t pos) const {  // pos 0..L-1
        return occ[static_cast<std::size_t>(pos)];
    }

    void refresh_bond(std::int64_t b) {
        const std::int64_t L = window.size();
        const std::int64_t s = b;
        const std::int64_t s1 = (b + 1) % L;
        const int e0 = site_occ(s), e1 = site_occ(s1);
        rates.set(static_cast<std::size_t>(2 * b),
                  e0 > 0 && e1 < params.two_j
                      ? jump_rate_pair(e0, e1, JumpDir::Right, params)
                      : 0.0);
        rates.set(static_cast<std::size_t>(2 * b + 1),
                  e1 > 0 && e0 < params.two_j
                      ? jump_rate_pair(e0, e1, JumpDir::Left, params)
                      : 0.0);
    }

    // phase 1: waiting time of the next event, +inf when frozen
    double next_event_time(RngStream& rng, double t_now) {
        const double total = rates.total();
        if (total <= 1e-300) return std::numeric_limits<double>::infinity();
        return t_now + rng.exponential(total);
    }

    // phase 2: pick and apply the event
    void apply_event(RngStream& rng, std::int64_t& bond_out, int& dir_out) {
        const double total = rates.total();
        const std::size_t entry = rates.sample(total * (1.0 - rng.uniform_pos()));
        const std::int64_t b = static_cast<std::int64_t>(entry / 2);
        const int dir = entry % 2 == 0 ? +1 : -1;
        const std::int64_t L = window.size();
        const std::int64_t s = b;
        const std::int64_t s1 = (b + 1) % L;
        if (dir > 0) {
            --occ[static_cast<std::size_t>(s)];
            ++occ[static_cast<std::size_t>(s1)];
            ++crossings[static_cast<std::size_t>(b)];
        } else {
            ++occ[static_cast<std::size_t>(s)];
            --occ[static_cast<std::size_t>(s1)];
            --crossings[static_cast<std::size_t>(b)];
        }
        if (boundary == BoundaryKind::TruncatedLine && (b == 0 || b == nb - 1))
            edge_touched = true;
        // only the bonds sharing a site with b change rate
        refresh_bond(b);
        if (boundary == BoundaryKind::Periodic) {
            refresh_bond((b + nb - 1) % nb);
            refresh_bond((b + 1) % nb);
        } else {
            if (b > 0) refresh_bond(b - 1);
            if (b + 1 < nb) refresh_bond(b + 1);
        }
        if (++events_since_rebuild >= 4096) {
            rates.rebuild();
            events_since_rebuild = 0;
        }
        bond_out = b;
        dir_out = dir;
    }
};

}  // namespace

EvolveResult evolve(const Configuration& cfg, double t_end, const QParams& params,
                    BoundaryKind boundary, RngStream& rng, bool record_events) {
    if (t_end < 0.0) throw std::domain_error("evolve: t_end must be >= 0");
    for (int v : cfg.occ)
        if (v < 0 || v > params.two_j) throw std::domain_error("evolve: occupancy out of range");

    Gillespie g(cfg, params, boundary);
    EvolveResult out;
    out.trajectory.initial = cfg;
    double t = 0.0;
    std::int64_t bond;
    int dir;
    while (true) {
        const double tn = g.next_event_time(rng, t);
        if (tn > t_end) break;
        t = tn;
        g.apply_event(rng, bond, dir);
        if (record_events) out.trajectory.events.push_back({t, g.window.first + bond, dir});
    }
    out.trajectory.final_time = t_end;
    out.final_config = Configuration(cfg.window, g.occ);
    out.currents.window = cfg.window;
    out.currents.periodic = boundary == BoundaryKind::Periodic;
    out.currents.crossings = g.crossings;
    out.contaminated = g.edge_touched;
    return out;
}

std::int64_t walker_simulate(std::int64_t i0, double t, const QParams& params, RngStream& rng) {
    if (t < 0.0) throw std::domain_error("walker_simulate: t must be >= 0");
    const WalkerLaw law(params);
    const std::int64_t right = static_cast<std::int64_t>(rng.poisson(law.right_rate * t));
    const std::int64_t left = static_cast<std::int64_t>(rng.poisson(law.left_rate * t));
    return i0 + right - left;
}

std::int64_t truncation_halfwidth(std::int64_t max_abs_bond, double t, const QParams& params) {
    const WalkerLaw law(params);
    return max_abs_bond + static_cast<std::int64_t>(std::ceil(4.0 * law.right_rate * t)) + 8;
}

namespace {

struct TrajResult {
    std::vector<double> values;  // times x bonds, row-major
    bool contaminated = false;
};

TrajResult run_one_trajectory(const InitialSpec& initial, const QParams& params,
                              const std::vector<std::int64_t>& bonds,
                              const std::vector<double>& times, std::uint64_t master_seed,
                              std::uint64_t traj_id, std::int64_t base_w) {
    constexpr int kMaxAttempts = 8;
    std::int64_t halfw = base_w;
    TrajResult res;
    res.values.assign(times.size() * bonds.size(), 0.0);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt, halfw *= 2) {
        RngStream rng(master_seed, traj_id, static_cast<std::uint32_t>(attempt));
        const Window window(-halfw, halfw);
        Configuration cfg;
        switch (initial.kind) {
            case InitialSpec::StepPlus: cfg = step_initial(+1, window, params); break;
            case InitialSpec::StepMinus: cfg = step_initial(-1, window, params); break;
            case InitialSpec::Product:
                cfg = sample_product_initial(initial.mu, window, params, rng);
                break;
        }
        Gillespie g(cfg, params, BoundaryKind::TruncatedLine);
        double t = 0.0;
        std::size_t next_time = 0;
        std::int64_t bond;
        int dir;
        const double t_end = times.back();
        // snapshot the currents at every checkpoint strictly before `now`
        const auto record_before = [&](double now) {
            while (next_time < times.size() && times[next_time] < now) {
                for (std::size_t b = 0; b < bonds.size(); ++b) {
                    const std::int64_t jj =
                        g.crossings[static_cast<std::size_t>(bonds[b] - 1 - window.first)];
                    res.values[next_time * bonds.size() + b] =
                        std::pow(params.q, 2.0 * static_cast<double>(jj));
                }
                ++next_time;
            }
        };
        const double past_end = std::nextafter(t_end, std::numeric_limits<double>::infinity());
        while (true) {
            const double tn = g.next_event_time(rng, t);
            record_before(std::min(tn, past_end));
            if (tn > t_end) break;
            t = tn;
            g.apply_event(rng, bond, dir);
        }
        record_before(past_end);
        if (!g.edge_touched) {
            res.contaminated = false;
            return res;
        }
        res.contaminated = true;  // retry with a doubled window
    }
    return res;
}

}  // namespace

std::vector<std::vector<MomentEstimate>> q_current_moment_mc_grid(
    const InitialSpec& initial, const QParams& params, const std::vector<std::int64_t>& bonds,
    const std::vector<double>& times, std::uint64_t n_traj, std::uint64_t master_seed,
    int workers, std::int64_t window_halfwidth) {
    if (n_traj < 1) throw std::domain_error("q_current_moment_mc: need at least one trajectory");
    if (bonds.empty() || times.empty()) throw std::domain_error("q_current_moment_mc: empty grid");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (times[k] < times[k - 1]) throw std::domain_error("times must be ascending");
    std::int64_t max_bond = 1;
    for (std::int64_t b : bonds) max_bond = std::max<std::int64_t>(max_bond, std::llabs(b));
    const std::int64_t base_w =
        window_halfwidth > 0 ? window_halfwidth
                             : truncation_halfwidth(max_bond, times.back(), params);

    const std::size_t cells = times.size() * bonds.size();
    std::vector<double> all(n_traj * cells);
    std::vector<std::uint8_t> flagged(n_traj, 0);

    std::atomic<std::uint64_t> next{0};
    const auto worker_fn = [&]() {
        while (true) {
            const std::uint64_t chunk = 64;
            const std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= n_traj) return;
            const std::uint64_t end = std::min(n_traj, begin + chunk);
            for (std::uint64_t id = begin; id < end; ++id) {
                TrajResult r =
                    run_one_trajectory(initial, params, bonds, times, master_seed, id, base_w);
                std::copy(r.values.begin(), r.values.end(), all.begin() + id * cells);
                flagged[id] = r.contaminated ? 1 : 0;
            }
        }
    };
    if (workers <= 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
        for (auto& th : pool) th.join();
    }

    std::uint64_t bad = 0;
    for (std::uint8_t f : flagged) bad += f;

    // ordered reduction over trajectory ids
    std::vector<std::vector<MomentEstimate>> out(
        times.size(), std::vector<MomentEstimate>(bonds.size()));
    for (std::size_t cell = 0; cell < cells; ++cell) {
        double mean = 0.0;
        for (std::uint64_t id = 0; id < n_traj; ++id) mean += all[id * cells + cell];
        mean /= static_cast<double>(n_traj);
        double ss = 0.0;
        for (std::uint64_t id = 0; id < n_traj; ++id) {
            const double d = all[id * cells + cell] - mean;
            ss += d * d;
        }
        MomentEstimate& est = out[cell / bonds.size()][cell % bonds.size()];
        est.estimate = mean;
        est.stderr_ = n_traj > 1 ? std::sqrt(ss / (static_cast<double>(n_traj) *
                                                   static_cast<double>(n_traj - 1)))
                                 : 0.0;
        est.contaminated_runs = bad;
    }
    return out;
}

MomentEstimate q_current_moment_mc(const InitialSpec& initial, const QParams& params,
                                   std::int64_t i, double t, std::uint64_t n_traj,
                                   std::uint64_t master_seed, int workers) {
    if (t == 0.0) return {1.0, 0.0, 0};
    return q_current_moment_mc_grid(initial, params, {i}, {t}, n_traj, master_seed, workers)[0][0];
}

}  // namespace asepqj
