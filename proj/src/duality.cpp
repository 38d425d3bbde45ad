#include "asepqj/duality.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "asepqj/qcalc.hpp"

namespace asepqj {

const char* to_string(DualityKind::Tag tag) {
    switch (tag) {
        case DualityKind::D: return "D";
        case DualityKind::Dprime: return "D'";
        case DualityKind::DiagonalAlpha: return "d_alpha";
    }
    return "?";
}

namespace {

double duality_product(DualityKind kind, const std::vector<int>& eta,
                       const std::vector<int>& xi, std::int64_t first_site,
                       const QParams& params) {
    const int L = static_cast<int>(eta.size());
    const double q = params.q;
    const double j = params.j();

    if (kind.tag == DualityKind::DiagonalAlpha) {
        if (!(kind.alpha > 0.0)) throw std::domain_error("diagonal duality: alpha must be > 0");
        if (eta != xi) return 0.0;
        double v = 1.0;
        for (int p = 0; p < L; ++p) {
            const double i = static_cast<double>(first_site + p);
            v /= q_binomial(params.two_j, eta[p], q) * std::pow(kind.alpha, eta[p]) *
                 std::pow(q, 2.0 * eta[p] * (1.0 + j - 2.0 * j * i));
        }
        return v;
    }

    for (int p = 0; p < L; ++p)
        if (xi[p] > eta[p]) return 0.0;

    double val = 1.0;
    double expo = 0.0;
    std::int64_t head_xi = 0, head_eta = 0;  // sums over k < i inside the window
    for (int p = 0; p < L; ++p) {
        const double i = static_cast<double>(first_site + p);
        val *= q_binomial(eta[p], xi[p], q) / q_binomial(params.two_j, xi[p], q);
        if (kind.tag == DualityKind::D)
            expo += (eta[p] - xi[p]) * (2.0 * head_xi + xi[p]);
        else  // Dprime; the local term carries +eta_i (see the decisions ledger)
            expo += (eta[p] - xi[p]) * (2.0 * head_eta + eta[p]);
        expo += 4.0 * j * i * xi[p];
        head_xi += xi[p];
        head_eta += eta[p];
    }
    return val * std::pow(q, expo);
}

}  // namespace

double duality_value(DualityKind kind, const Configuration& eta, const Configuration& xi,
                     const QParams& params) {
    if (eta.window.first != xi.window.first || eta.window.last != xi.window.last)
        throw std::domain_error("duality_value: configurations on different windows");
    return duality_product(kind, eta.occ, xi.occ, eta.window.first, params);
}

Matrix duality_matrix(DualityKind kind, const QParams& params, int L) {
    const int d = params.local_dim();
    const std::size_t dim = chain_dim(params, L);
    Matrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        const std::vector<int> eta = index_config(a, L, d);
        for (std::size_t b = 0; b < dim; ++b) {
            const std::vector<int> xi = index_config(b, L, d);
            m(a, b) = duality_product(kind, eta, xi, 1, params);
        }
    }
    return m;
}

double duality_residual_for(const Matrix& M, const Matrix& D) {
    return max_abs_diff(multiply(M, D), multiply_nt(D, M));
}

double duality_residual(DualityKind kind, const QParams& params, int L, std::size_t dim_cap) {
    const Matrix M = generator_matrix(params, L, BoundaryKind::Closed, dim_cap);
    const Matrix D = duality_matrix(kind, params, L);
    return duality_residual_for(M, D);
}

Matrix duality_from_symmetry(ExpSymKind kind, const QParams& params, int L) {
    if (kind != ExpSymKind::Sp && kind != ExpSymKind::Smt)
        throw std::invalid_argument("duality_from_symmetry: use Sp or Smt");
    const Matrix s = exponential_symmetry(kind, params, L);
    const std::vector<double> g = ground_state(params, L);
    Matrix out(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) out(r, c) = s(r, c) / (g[r] * g[c]);
    return out;
}

double sector_proportionality_residual(ExpSymKind kind, const QParams& params, int L) {
    const Matrix X = duality_from_symmetry(kind, params, L);
    const Matrix D = duality_matrix(
        kind == ExpSymKind::Sp ? DualityKind::d() : DualityKind::dprime(), params, L);
    const int d = params.local_dim();
    const std::size_t dim = chain_dim(params, L);

    std::vector<int> totals(dim);
    std::vector<std::vector<int>> configs(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        configs[a] = index_config(a, L, d);
        int n = 0;
        for (int v : configs[a]) n += v;
        totals[a] = n;
    }

    std::map<std::pair<int, int>, double> ratio;
    double worst = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            // Smt builds the transpose of Dprime (sector-wise): compare X^T to D'.
            const double x = kind == ExpSymKind::Sp ? X(a, b) : X(b, a);
            const double dv = D(a, b);
            // support is exactly the indicator xi <= eta; both sides share it
            bool in_support = true;
            for (int s = 0; s < L; ++s)
                if (configs[b][s] > configs[a][s]) in_support = false;
            if (!in_support) {
                if (x != 0.0 || dv != 0.0) worst = std::max(worst, 1.0);
                continue;
            }
            const double r = x / dv;
            const auto key = std::make_pair(totals[a], totals[b]);
            auto it = ratio.find(key);
            if (it == ratio.end())
                ratio.emplace(key, r);
            else
                worst = std::max(worst, std::fabs(r - it->second) / std::fabs(it->second));
        }
    }
    return worst;
}

double schuetz_reduction_check(const QParams& params, int L) {
    if (params.two_j != 1) throw std::domain_error("schuetz_reduction_check: needs j = 1/2");
    const double q = params.q;
    const std::size_t dim = chain_dim(params, L);
    const Matrix Dp = duality_matrix(DualityKind::dprime(), params, L);

    std::map<std::pair<int, int>, double> ratio;
    double worst = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        const std::vector<int> eta = index_config(a, L, 2);
        std::vector<int> left(static_cast<std::size_t>(L) + 1, 0);  // N_i = sum_{k<=i} eta_k
        for (int p = 0; p < L; ++p) left[p + 1] = left[p] + eta[p];
        for (std::size_t b = 0; b < dim; ++b) {
            const std::vector<int> xi = index_config(b, L, 2);
            bool ordered = true;
            double pref = 1.0;
            int m = 0;
            for (int p = 0; p < L; ++p) {
                if (xi[p] > eta[p]) ordered = false;
                if (xi[p] == 1) {
                    const int k = p + 1;
                    pref *= std::pow(q, 2.0 * k) * std::pow(q, -2.0 * left[k - 1]) * eta[p];
                    ++m;
                }
            }
            if (!ordered || pref == 0.0) {
                if (std::fabs(Dp(a, b)) > 1e-14 * max_abs(Dp)) worst = std::max(worst, 1.0);
                continue;
            }
            const double r = Dp(a, b) / pref;
            const auto key = std::make_pair(left[L], m);
            auto it = ratio.find(key);
            if (it == ratio.end())
                ratio.emplace(key, r);
            else
                worst = std::max(worst, std::fabs(r - it->second) / std::fabs(it->second));
        }
    }
    return worst;
}

}  // namespace asepqj
