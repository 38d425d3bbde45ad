#pragma once

#include <cstddef>
#include <vector>

namespace asepqj {

// Fenwick tree over nonnegative weights with cumulative sampling; backs the
// O(log n) event selection of the kinetic Monte Carlo loop.
class FenwickTree {
  public:
    explicit FenwickTree(std::size_t n) : n_(n), tree_(n + 1, 0.0), raw_(n, 0.0) {}

    std::size_t size() const { return n_; }
    double value(std::size_t i) const { return raw_[i]; }
    double total() const { return total_; }

    void set(std::size_t i, double v) {
        const double delta = v - raw_[i];
        if (delta == 0.0) return;
        raw_[i] = v;
        total_ += delta;
        for (std::size_t k = i + 1; k <= n_; k += k & (~k + 1)) tree_[k] += delta;
    }

    // recompute sums from the raw weights; called periodically to shed the
    // rounding drift of incremental updates
    void rebuild() {
        std::fill(tree_.begin(), tree_.end(), 0.0);
        total_ = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            total_ += raw_[i];
            for (std::size_t k = i + 1; k <= n_; k += k & (~k + 1)) tree_[k] += raw_[i];
        }
    }

    // smallest index with prefix sum > target, for target in [0, total)
    std::size_t sample(double target) const {
        std::size_t idx = 0;
        std::size_t mask = 1;
        while ((mask << 1) <= n_) mask <<= 1;
        for (; mask != 0; mask >>= 1) {
            const std::size_t next = idx + mask;
            if (next <= n_ && tree_[next] <= target) {
                idx = next;
                target -= tree_[idx];
            }
        }
        // guard against the all-consumed edge produced by rounding
        while (idx < n_ && raw_[idx] <= 0.0) ++idx;
        return idx < n_ ? idx : n_ - 1;
    }

  private:
    std::size_t n_;
    std::vector<double> tree_;
    std::vector<double> raw_;
    double total_ = 0.0;
};

}  // namespace asepqj
