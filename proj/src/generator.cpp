#include "asepqj/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "asepqj/algebra.hpp"
#include "asepqj/qcalc.hpp"

namespace asepqj {

const char* to_string(BoundaryKind b) {
    switch (b) {
        case BoundaryKind::Closed: return "closed";
        case BoundaryKind::Periodic: return "periodic";
        case BoundaryKind::TruncatedLine: return "truncated-line";
    }
    return "?";
}

double jump_rate_pair(int eta_i, int eta_ip1, JumpDir dir, const QParams& params) {
    const double q = params.q;
    const int tj = params.two_j;
    if (eta_i < 0 || eta_i > tj || eta_ip1 < 0 || eta_ip1 > tj)
        throw std::domain_error("jump_rate: occupancy out of range");
    if (dir == JumpDir::Right)
        return std::pow(q, eta_i - eta_ip1 - (tj + 1)) * q_number_int(eta_i, q) *
               q_number_int(tj - eta_ip1, q);
    return std::pow(q, eta_i - eta_ip1 + (tj + 1)) * q_number_int(tj - eta_i, q) *
           q_number_int(eta_ip1, q);
}

double jump_rate(const Configuration& cfg, std::int64_t i, JumpDir dir,
                 const QParams& params, BoundaryKind boundary) {
    const Window& w = cfg.window;
    if (boundary == BoundaryKind::Periodic) {
        if (!w.contains(i)) throw std::domain_error("jump_rate: bond outside window");
        const std::int64_t ip1 = i == w.last ? w.first : i + 1;
        return jump_rate_pair(cfg.at_site(i), cfg.at_site(ip1), dir, params);
    }
    if (!w.contains(i) || !w.contains(i + 1))
        throw std::domain_error("jump_rate: bond outside window");
    return jump_rate_pair(cfg.at_site(i), cfg.at_site(i + 1), dir, params);
}

Matrix generator_matrix(const QParams& params, int L, BoundaryKind boundary,
                        std::size_t dim_cap) {
    if (L < 2) throw std::domain_error("generator_matrix: need L >= 2");
    if (boundary == BoundaryKind::Periodic && L < 3)
        throw std::domain_error("generator_matrix: periodic boundary needs L >= 3");
    check_dim_cap(params, L, dim_cap);
    const int d = params.local_dim();
    const int tj = params.two_j;
    const std::size_t dim = chain_dim(params, L);
    const int nb = boundary == BoundaryKind::Periodic ? L : L - 1;

    Matrix m(dim, dim);
    std::vector<std::size_t> place(static_cast<std::size_t>(L));  // digit weight per site
    place[static_cast<std::size_t>(L - 1)] = 1;
    for (int p = L - 2; p >= 0; --p) place[p] = place[p + 1] * static_cast<std::size_t>(d);

    for (std::size_t x = 0; x < dim; ++x) {
        const std::vector<int> eta = index_config(x, L, d);
        for (int b = 0; b < nb; ++b) {
            const int s = b;
            const int s1 = (b + 1) % L;
            if (eta[s] > 0 && eta[s1] < tj) {
                const double r = jump_rate_pair(eta[s], eta[s1], JumpDir::Right, params);
                const std::size_t y = x - place[s] + place[s1];
                m(x, y) += r;
                m(x, x) -= r;
            }
            if (eta[s1] > 0 && eta[s] < tj) {
                const double r = jump_rate_pair(eta[s], eta[s1], JumpDir::Left, params);
                const std::size_t y = x + place[s] - place[s1];
                m(x, y) += r;
                m(x, x) -= r;
            }
        }
    }
    return m;
}

std::vector<double> reversible_marginal(const QParams& params, double alpha, std::int64_t i) {
    if (!(alpha > 0.0)) throw std::domain_error("reversible_marginal: alpha must be positive");
    const double q = params.q;
    const double j = params.j();
    std::vector<double> p(static_cast<std::size_t>(params.local_dim()));
    double z = 0.0;
    for (int n = 0; n <= params.two_j; ++n) {
        p[n] = std::pow(alpha, n) * q_binomial(params.two_j, n, q) *
               std::pow(q, 2.0 * n * (1.0 + j - 2.0 * j * static_cast<double>(i)));
        z += p[n];
    }
    for (double& v : p) v /= z;
    return p;
}

DetailedBalanceResult detailed_balance_check(const QParams& params, double alpha, int L,
                                             BoundaryKind boundary) {
    if (L < 1) throw std::domain_error("detailed_balance_check: need L >= 1");
    const int d = params.local_dim();
    const int tj = params.two_j;
    const std::size_t dim = chain_dim(params, L);
    std::vector<std::vector<double>> marg(static_cast<std::size_t>(L));
    for (int s = 0; s < L; ++s) marg[s] = reversible_marginal(params, alpha, s + 1);

    const int nb = boundary == BoundaryKind::Periodic ? L : L - 1;
    DetailedBalanceResult out;
    for (std::size_t x = 0; x < dim; ++x) {
        const std::vector<int> eta = index_config(x, L, d);
        double mu = 1.0;
        for (int s = 0; s < L; ++s) mu *= marg[s][eta[s]];
        for (int b = 0; b < nb; ++b) {
            const int s = b, s1 = (b + 1) % L;
            if (eta[s] == 0 || eta[s1] == tj) continue;
            std::vector<int> nxt = eta;
            --nxt[s];
            ++nxt[s1];
            double mu2 = 1.0;
            for (int t = 0; t < L; ++t) mu2 *= marg[t][nxt[t]];
            const double fwd = mu * jump_rate_pair(eta[s], eta[s1], JumpDir::Right, params);
            const double bwd = mu2 * jump_rate_pair(nxt[s], nxt[s1], JumpDir::Left, params);
            out.residual = std::max(out.residual, std::fabs(fwd - bwd));
            out.scale = std::max(out.scale, std::max(fwd, bwd));
        }
    }
    return out;
}

double detailed_balance_residual(const QParams& params, double alpha, int L,
                                 BoundaryKind boundary) {
    return detailed_balance_check(params, alpha, L, boundary).residual;
}

ObstructionRecord product_measure_obstruction(double q) {
    if (!(q > 0.0) || q >= 1.0 - 1e-12)
        throw std::domain_error("product_measure_obstruction: needs q in (0,1)");
    ObstructionRecord rec;
    const double q3 = q * q * q;
    rec.alpha = q3 + q - 1.0 / q - 1.0 / q3;
    rec.gamma = (q3 + 3.0 * q + 3.0 / q + 1.0 / q3) / (q3 + 1.0 / q3);
    rec.delta = rec.gamma * q3 - q - 2.0 / q - 1.0 / q3;
    rec.gap = rec.delta - 2.0 * rec.alpha;
    return rec;
}

}  // namespace asepqj
