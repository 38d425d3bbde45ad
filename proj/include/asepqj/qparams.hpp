#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace asepqj {

// Model parameters (q, 2j). q = 1 is the symmetric limit branch, detected by
// |q - 1| < 1e-12 so the 0/0 form of the q-numbers is never evaluated.
struct QParams {
    double q = 0.5;
    int two_j = 1;

    QParams() = default;
    QParams(double q_, int two_j_) : q(q_), two_j(two_j_) {
        if (!(q > 0.0) || q > 1.0) throw std::domain_error("QParams: q must be in (0,1]");
        if (two_j < 1) throw std::domain_error("QParams: 2j must be a positive integer");
    }

    int local_dim() const { return two_j + 1; }
    double j() const { return 0.5 * two_j; }
    bool symmetric() const { return q > 1.0 - 1e-12; }
};

// Integer site window [first, last] on Z.
struct Window {
    std::int64_t first = 1;
    std::int64_t last = 1;

    Window() = default;
    Window(std::int64_t a, std::int64_t b) : first(a), last(b) {
        if (b < a) throw std::domain_error("Window: empty site window");
    }
    std::int64_t size() const { return last - first + 1; }
    bool contains(std::int64_t site) const { return site >= first && site <= last; }
};

// Occupation configuration on a window, entries in {0,...,2j}.
struct Configuration {
    Window window;
    std::vector<int> occ;

    Configuration() = default;
    Configuration(Window w, std::vector<int> o) : window(w), occ(std::move(o)) {
        if (static_cast<std::int64_t>(occ.size()) != window.size())
            throw std::domain_error("Configuration: occupancy length does not match window");
    }

    int at_site(std::int64_t site) const { return occ[static_cast<std::size_t>(site - window.first)]; }
    int& at_site(std::int64_t site) { return occ[static_cast<std::size_t>(site - window.first)]; }

    std::int64_t total() const {
        std::int64_t n = 0;
        for (int v : occ) n += v;
        return n;
    }

    // N_i = sum_{k >= i} eta_k restricted to the window
    std::int64_t tail_count(std::int64_t i) const {
        std::int64_t n = 0;
        for (std::int64_t s = std::max(i, window.first); s <= window.last; ++s) n += at_site(s);
        return n;
    }
};

// Mixed-radix encoding of length-L digit strings in base d, leftmost digit
// most significant. Used as the basis indexing of all operator matrices.
inline std::size_t config_index(const std::vector<int>& occ, int d) {
    std::size_t idx = 0;
    for (int v : occ) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
    return idx;
}

inline std::vector<int> index_config(std::size_t idx, int L, int d) {
    std::vector<int> occ(static_cast<std::size_t>(L));
    for (int p = L - 1; p >= 0; --p) {
        occ[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<std::size_t>(d));
        idx /= static_cast<std::size_t>(d);
    }
    return occ;
}

}  // namespace asepqj
