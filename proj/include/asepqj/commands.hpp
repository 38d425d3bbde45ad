#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asepqj/qparams.hpp"

namespace asepqj {

// exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitContaminated = 3;

struct RunConfig {
    double q = 0.5;
    int two_j = 2;
    int length = 3;
    std::string boundary = "closed";
    std::string initial = "step+";            // step+ | step- | product
    std::vector<double> mu;                   // product measure weights
    std::vector<double> times = {0.5, 1.0, 2.0};
    std::vector<std::int64_t> bonds = {-2, -1, 0, 1, 2};
    std::uint64_t trajectories = 100000;
    std::uint64_t seed = 12345;
    bool seed_set = false;                    // else ASEPQJ_SEED may override
    double alpha = 1.0;
    double time = 1.0;                        // simulate horizon
    std::string out;
    double tol_scale = 1.0;
    int workers = 0;                          // 0 = machine parallelism
    std::int64_t window = 0;                  // 0 = auto half-width
    std::size_t dim_cap = 4096;
    double corrupt_rate = 0.0;                // verify negative-control hook
    int grid_points = 50;                     // ldp x-grid
};

// resolves seed fallback (ASEPQJ_SEED) and worker default; throws
// std::domain_error on invalid combinations
void finalize_config(RunConfig& cfg);

int cmd_verify(RunConfig cfg);
int cmd_simulate(RunConfig cfg);
int cmd_moment(RunConfig cfg);
int cmd_ldp(RunConfig cfg);

}  // namespace asepqj
