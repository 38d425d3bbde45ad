#include "asepqj/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "asepqj/qcalc.hpp"

namespace asepqj {

namespace {

Matrix diag_from(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// kron chain with `op` spanning `width` sites starting at 0-based `pos`
Matrix padded(const Matrix& op, int pos, int width, int L, int d) {
    Matrix out(1, 1);
    out(0, 0) = 1.0;
    int s = 0;
    while (s < L) {
        if (s == pos) {
            out = kron(out, op);
            s += width;
        } else {
            out = kron(out, Matrix::identity(static_cast<std::size_t>(d)));
            ++s;
        }
    }
    return out;
}

// kron over per-site factors
Matrix kron_sites(const std::vector<const Matrix*>& factors) {
    Matrix out(1, 1);
    out(0, 0) = 1.0;
    for (const Matrix* f : factors) out = kron(out, *f);
    return out;
}

}  // namespace

LocalOps local_operators(const QParams& params) {
    const int d = params.local_dim();
    const double q = params.q;
    const double j = params.j();
    LocalOps ops;
    ops.params = params;
    ops.jp = Matrix(d, d);
    ops.jm = Matrix(d, d);
    for (int n = 0; n + 1 < d; ++n)
        ops.jp(n + 1, n) = std::sqrt(q_number_int(params.two_j - n, q) * q_number_int(n + 1, q));
    for (int n = 1; n < d; ++n)
        ops.jm(n - 1, n) = std::sqrt(q_number_int(n, q) * q_number_int(params.two_j - n + 1, q));
    std::vector<double> m0(d), qj0(d), qmj0(d), kk(d);
    for (int n = 0; n < d; ++n) {
        m0[n] = n - j;
        qj0[n] = std::pow(q, n - j);
        qmj0[n] = std::pow(q, -(n - j));
        kk[n] = std::pow(q, 2.0 * (n - j));
    }
    ops.j0 = diag_from(m0);
    ops.q_j0 = diag_from(qj0);
    ops.q_mj0 = diag_from(qmj0);
    ops.k = diag_from(kk);
    ops.e = multiply(ops.q_j0, ops.jp);
    ops.f = multiply(ops.jm, ops.q_mj0);
    ops.et = multiply(ops.jp, ops.q_mj0);
    ops.ft = multiply(ops.q_j0, ops.jm);
    return ops;
}

Matrix local_casimir(const QParams& params) {
    const LocalOps ops = local_operators(params);
    const int d = params.local_dim();
    Matrix c = multiply(ops.jm, ops.jp);
    for (int n = 0; n < d; ++n) {
        const double m = n - params.j();
        c(n, n) += q_number(m, params.q) * q_number(m + 1.0, params.q);
    }
    return c;
}

double bond_constant(const QParams& params) {
    const double q = params.q;
    const int tj = params.two_j;
    if (params.symmetric()) return static_cast<double>(tj) * (tj + 1);
    const double num = (std::pow(q, tj) - std::pow(q, -tj)) *
                       (std::pow(q, tj + 1) - std::pow(q, -(tj + 1)));
    const double den = (q - 1.0 / q) * (q - 1.0 / q);
    return num / den;
}

Matrix two_site_casimir_coproduct(const QParams& params) {
    const LocalOps ops = local_operators(params);
    const int d = params.local_dim();
    const double q = params.q;
    const double j = params.j();
    const double k1 = (std::pow(q, j) + std::pow(q, -j)) *
                      (std::pow(q, j + 1) + std::pow(q, -(j + 1))) / 2.0;
    const double k2 = q_number(j, q) * q_number(j + 1.0, q) / 2.0;

    std::vector<double> bj(d), cosh(d);
    for (int n = 0; n < d; ++n) {
        bj[n] = q_number(n - j, q);
        cosh[n] = std::pow(q, n - j) + std::pow(q, -(n - j));
    }
    const Matrix brJ0 = diag_from(bj);
    const Matrix ch = diag_from(cosh);

    Matrix bracket = kron(ops.jp, ops.jm);
    bracket += kron(ops.jm, ops.jp);
    bracket += k1 * kron(brJ0, brJ0);
    bracket += k2 * kron(ch, ch);

    const Matrix left = kron(ops.q_j0, Matrix::identity(static_cast<std::size_t>(d)));
    const Matrix right = kron(Matrix::identity(static_cast<std::size_t>(d)), ops.q_mj0);
    Matrix out = multiply(left, multiply(bracket, right));
    out *= -1.0;
    return out;
}

Matrix two_site_hamiltonian(const QParams& params) {
    Matrix h = two_site_casimir_coproduct(params);
    const double c = bond_constant(params);
    const std::size_t dd = h.rows();
    for (std::size_t i = 0; i < dd; ++i) h(i, i) += c;
    h *= -1.0;
    return h;
}

std::size_t chain_dim(const QParams& params, int L) {
    std::size_t dim = 1;
    for (int s = 0; s < L; ++s) dim *= static_cast<std::size_t>(params.local_dim());
    return dim;
}

void check_dim_cap(const QParams& params, int L, std::size_t dim_cap) {
    if (L < 1) throw std::domain_error("chain length must be >= 1");
    std::size_t dim = 1;
    for (int s = 0; s < L; ++s) {
        dim *= static_cast<std::size_t>(params.local_dim());
        if (dim > dim_cap) throw std::length_error("state space exceeds dimension cap");
    }
}

Matrix hamiltonian(const QParams& params, int L, std::size_t dim_cap) {
    if (L < 2) throw std::domain_error("hamiltonian: need L >= 2");
    check_dim_cap(params, L, dim_cap);
    const int d = params.local_dim();
    const Matrix bond = two_site_hamiltonian(params);
    Matrix h(chain_dim(params, L), chain_dim(params, L));
    for (int i = 0; i + 1 < L; ++i) h += padded(bond, i, 2, L, d);
    return h;
}

const char* to_string(ChainOpKind k) {
    switch (k) {
        case ChainOpKind::Jp: return "Jp";
        case ChainOpKind::Jm: return "Jm";
        case ChainOpKind::J0: return "J0";
        case ChainOpKind::E: return "E";
        case ChainOpKind::F: return "F";
        case ChainOpKind::Et: return "Et";
        case ChainOpKind::Ft: return "Ft";
    }
    return "?";
}

const char* to_string(ExpSymKind k) {
    switch (k) {
        case ExpSymKind::Sp: return "S+";
        case ExpSymKind::Sm: return "S-";
        case ExpSymKind::Spt: return "S~+";
        case ExpSymKind::Smt: return "S~-";
    }
    return "?";
}

Matrix chain_symmetry(ChainOpKind kind, const QParams& params, int L) {
    if (L < 2) throw std::domain_error("chain_symmetry: need L >= 2");
    const LocalOps ops = local_operators(params);
    const int d = params.local_dim();
    const Matrix id = Matrix::identity(static_cast<std::size_t>(d));
    const Matrix kinv = [&] {
        Matrix m(d, d);
        for (int n = 0; n < d; ++n) m(n, n) = 1.0 / ops.k(n, n);
        return m;
    }();

    Matrix out(chain_dim(params, L), chain_dim(params, L));
    for (int i = 0; i < L; ++i) {
        std::vector<const Matrix*> factors(static_cast<std::size_t>(L), &id);
        switch (kind) {
            case ChainOpKind::Jp:
            case ChainOpKind::Jm:
                // Delta^{L-1}(J+-): q^{J0} heads, J+- at i, q^{-J0} tails
                for (int s = 0; s < i; ++s) factors[s] = &ops.q_j0;
                factors[i] = kind == ChainOpKind::Jp ? &ops.jp : &ops.jm;
                for (int s = i + 1; s < L; ++s) factors[s] = &ops.q_mj0;
                break;
            case ChainOpKind::J0:
                factors[i] = &ops.j0;
                break;
            case ChainOpKind::E:  // E_1 + K_1 E_2 + K_1 K_2 E_3 + ...
                for (int s = 0; s < i; ++s) factors[s] = &ops.k;
                factors[i] = &ops.e;
                break;
            case ChainOpKind::F:  // F_1 K_2^-1 .. K_L^-1 + ... + F_L
                factors[i] = &ops.f;
                for (int s = i + 1; s < L; ++s) factors[s] = &kinv;
                break;
            case ChainOpKind::Et:  // Et_1 K_2^-1 .. K_L^-1 + ... + Et_L
                factors[i] = &ops.et;
                for (int s = i + 1; s < L; ++s) factors[s] = &kinv;
                break;
            case ChainOpKind::Ft:  // Ft_1 + K_1 Ft_2 + ...
                for (int s = 0; s < i; ++s) factors[s] = &ops.k;
                factors[i] = &ops.ft;
                break;
        }
        out += kron_sites(factors);
    }
    return out;
}

namespace {

// closed-form matrix elements of the four q-exponential symmetries; the
// exponents follow the pseudo-factorized site-by-site action
double exp_sym_element(ExpSymKind kind, const std::vector<int>& eta,
                       const std::vector<int>& xi, const QParams& params) {
    const double q = params.q;
    const double j = params.j();
    const int tj = params.two_j;
    const int L = static_cast<int>(eta.size());
    const bool raising = kind == ExpSymKind::Sp || kind == ExpSymKind::Spt;
    for (int i = 0; i < L; ++i) {
        if (raising && xi[i] > eta[i]) return 0.0;
        if (!raising && eta[i] > xi[i]) return 0.0;
    }
    double val = 1.0;
    double expo = 0.0;
    double head = 0.0;  // sum_{k<i} (xi_k - j)
    std::vector<double> tail(static_cast<std::size_t>(L) + 1, 0.0);  // sum_{k>i} (eta_k - j)
    for (int i = L - 1; i >= 0; --i) tail[i] = tail[i + 1] + (eta[i] - j);
    for (int i = 0; i < L; ++i) {
        const int e = eta[i], x = xi[i];
        switch (kind) {
            case ExpSymKind::Sp:
                val *= std::sqrt(q_binomial(e, x, q) * q_binomial(tj - x, tj - e, q));
                expo += (e - x) * (1.0 - j + x + 2.0 * head);
                break;
            case ExpSymKind::Spt:
                val *= std::sqrt(q_binomial(tj - x, tj - e, q) * q_binomial(e, x, q));
                expo += -(e - x) * (2.0 * tail[i + 1] + e - j - 1.0);
                break;
            case ExpSymKind::Sm:
                val *= std::sqrt(q_binomial(x, e, q) * q_binomial(tj - e, tj - x, q));
                expo += -(x - e) * (2.0 * tail[i + 1] + e - j + 1.0);
                break;
            case ExpSymKind::Smt:
                val *= std::sqrt(q_binomial(x, e, q) * q_binomial(tj - e, tj - x, q));
                expo += (x - e) * (2.0 * head + x - j - 1.0);
                break;
        }
        head += xi[i] - j;
    }
    return val * std::pow(q, expo);
}

}  // namespace

Matrix exponential_symmetry(ExpSymKind kind, const QParams& params, int L) {
    if (L < 2) throw std::domain_error("exponential_symmetry: need L >= 2");
    const int d = params.local_dim();
    const std::size_t dim = chain_dim(params, L);
    Matrix s(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        const std::vector<int> eta = index_config(a, L, d);
        for (std::size_t b = 0; b < dim; ++b) {
            const std::vector<int> xi = index_config(b, L, d);
            s(a, b) = exp_sym_element(kind, eta, xi, params);
        }
    }
    return s;
}

Matrix exponential_symmetry_series(ExpSymKind kind, const QParams& params, int L) {
    const double q = params.q;
    switch (kind) {
        case ExpSymKind::Sp:
            return q_matrix_exponential(chain_symmetry(ChainOpKind::E, params, L), q * q);
        case ExpSymKind::Sm:
            return q_matrix_exponential(chain_symmetry(ChainOpKind::F, params, L), 1.0 / (q * q));
        case ExpSymKind::Spt:
            return q_matrix_exponential(chain_symmetry(ChainOpKind::Et, params, L), q * q);
        case ExpSymKind::Smt:
            return q_matrix_exponential(chain_symmetry(ChainOpKind::Ft, params, L), 1.0 / (q * q));
    }
    throw std::invalid_argument("unknown symmetry kind");
}

FactorizationResidual verify_pseudo_factorization(const QParams& params, int L) {
    if (L < 2) throw std::domain_error("verify_pseudo_factorization: need L >= 2");
    const LocalOps ops = local_operators(params);
    const int d = params.local_dim();
    const double q = params.q;
    const Matrix id = Matrix::identity(static_cast<std::size_t>(d));
    Matrix kinv(d, d);
    for (int n = 0; n < d; ++n) kinv(n, n) = 1.0 / ops.k(n, n);

    FactorizationResidual res;
    {
        Matrix prod = Matrix::identity(chain_dim(params, L));
        for (int i = 0; i < L; ++i) {
            std::vector<const Matrix*> factors(static_cast<std::size_t>(L), &id);
            for (int s = 0; s < i; ++s) factors[s] = &ops.k;
            factors[i] = &ops.e;
            prod = multiply(prod, q_matrix_exponential(kron_sites(factors), q * q));
        }
        const Matrix whole =
            q_matrix_exponential(chain_symmetry(ChainOpKind::E, params, L), q * q);
        res.raising = max_abs_diff(whole, prod);
    }
    {
        Matrix prod = Matrix::identity(chain_dim(params, L));
        for (int i = 0; i < L; ++i) {
            std::vector<const Matrix*> factors(static_cast<std::size_t>(L), &id);
            factors[i] = &ops.f;
            for (int s = i + 1; s < L; ++s) factors[s] = &kinv;
            prod = multiply(prod, q_matrix_exponential(kron_sites(factors), 1.0 / (q * q)));
        }
        const Matrix whole =
            q_matrix_exponential(chain_symmetry(ChainOpKind::F, params, L), 1.0 / (q * q));
        res.lowering = max_abs_diff(whole, prod);
    }
    return res;
}

std::vector<double> ground_state(const QParams& params, int L) {
    const int d = params.local_dim();
    const double q = params.q;
    const double j = params.j();
    const std::size_t dim = chain_dim(params, L);
    std::vector<double> g(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        const std::vector<int> eta = index_config(a, L, d);
        double v = 1.0;
        for (int p = 0; p < L; ++p) {
            const int i = p + 1;
            v *= std::sqrt(q_binomial(params.two_j, eta[p], q)) *
                 std::pow(q, eta[p] * (1.0 + j - 2.0 * j * i));
        }
        g[a] = v;
    }
    return g;
}

std::vector<double> ground_state_via_symmetry(const QParams& params, int L) {
    const Matrix sp = exponential_symmetry_series(ExpSymKind::Sp, params, L);
    std::vector<double> vac(chain_dim(params, L), 0.0);
    vac[0] = 1.0;
    return apply(sp, vac);
}

Matrix ground_transform(const QParams& params, int L) {
    const std::vector<double> g = ground_state(params, L);
    Matrix m(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g[i];
    return m;
}

Matrix conjugate_by_ground_transform(const Matrix& H, const QParams& params, int L) {
    const std::vector<double> g = ground_state(params, L);
    if (H.rows() != g.size()) throw std::invalid_argument("dimension mismatch");
    Matrix out(H.rows(), H.cols());
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t c = 0; c < H.cols(); ++c) out(r, c) = H(r, c) * g[c] / g[r];
    return out;
}

}  // namespace asepqj
