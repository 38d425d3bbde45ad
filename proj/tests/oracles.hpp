#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "asepqj/generator.hpp"
#include "asepqj/linalg.hpp"
#include "asepqj/qparams.hpp"

namespace asepqj::test_oracles {

// Row x0 of exp(tM) for a Markov generator M, by uniformization:
//   exp(tM) = e^{-Lt} sum_k (Lt)^k/k! (I + M/L)^k
// Pure matvec iteration; no scaling-and-squaring, no series on matrices.
inline std::vector<double> markov_row_distribution(const Matrix& M, std::size_t x0, double t) {
    const std::size_t n = M.rows();
    double rate = 0.0;
    for (std::size_t i = 0; i < n; ++i) rate = std::max(rate, -M(i, i));
    std::vector<double> v(n, 0.0), out(n, 0.0), next(n, 0.0);
    v[x0] = 1.0;
    if (rate <= 0.0 || t <= 0.0) {
        out[x0] = 1.0;
        return out;
    }
    const double lt = rate * t;
    double logw = -lt;  // log of e^{-Lt} (Lt)^k / k!
    const int kmax = static_cast<int>(lt + 12.0 * std::sqrt(lt) + 40.0);
    for (int k = 0;; ++k) {
        const double w = std::exp(logw);
        for (std::size_t i = 0; i < n; ++i) out[i] += w * v[i];
        if (k >= kmax) break;
        // v <- v (I + M/L), i.e. next[j] = v[j] + sum_i v[i] M(i,j)/L
        for (std::size_t j = 0; j < n; ++j) next[j] = v[j];
        for (std::size_t i = 0; i < n; ++i) {
            const double vi = v[i];
            if (vi == 0.0) continue;
            const double* row = M.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) next[j] += vi * row[j] / rate;
        }
        v.swap(next);
        logw += std::log(lt) - std::log(static_cast<double>(k + 1));
    }
    return out;
}

// E_eta[q^{2 J_i(t)}] on a closed window via the time-t law and the
// height identity J_i(t) = N_i(eta(t)) - N_i(eta(0)).
inline double brute_current_moment(const Configuration& eta0, std::int64_t i, double t,
                                   const QParams& p) {
    const int L = static_cast<int>(eta0.window.size());
    const int d = p.local_dim();
    const Matrix M = generator_matrix(p, L, BoundaryKind::Closed, std::size_t(1) << 22);
    const std::size_t x0 = config_index(eta0.occ, d);
    const std::vector<double> law = markov_row_distribution(M, x0, t);
    const double n0 = static_cast<double>(eta0.tail_count(i));
    double out = 0.0;
    for (std::size_t y = 0; y < law.size(); ++y) {
        if (law[y] == 0.0) continue;
        const Configuration cfg(eta0.window, index_config(y, L, d));
        out += law[y] * std::pow(p.q, 2.0 * (static_cast<double>(cfg.tail_count(i)) - n0));
    }
    return out;
}

}  // namespace asepqj::test_oracles
