#pragma once

#include <cmath>
#include <cstdint>

namespace asepqj {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A stream is
// keyed by (master seed, stream id, substream); identical keys reproduce the
// identical sequence on any thread schedule, which is what makes ordered
// Monte Carlo reductions byte-stable.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id, std::uint32_t substream = 0)
        : key0_(static_cast<std::uint32_t>(master_seed)),
          key1_(static_cast<std::uint32_t>(master_seed >> 32)),
          c1_(substream),
          c2_(static_cast<std::uint32_t>(stream_id)),
          c3_(static_cast<std::uint32_t>(stream_id >> 32)) {}

    std::uint64_t next_u64() {
        if (have_ < 2) refill();
        const std::uint64_t v =
            (static_cast<std::uint64_t>(buf_[have_ - 1]) << 32) | buf_[have_ - 2];
        have_ -= 2;
        return v;
    }

    // uniform on (0,1]; strictly positive so -log(u) is always finite
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    // exact Poisson by the product method, chunked so exp(-lambda) stays normal
    std::uint64_t poisson(double mean) {
        std::uint64_t count = 0;
        while (mean > 30.0) {
            count += poisson_chunk(30.0);
            mean -= 30.0;
        }
        return count + poisson_chunk(mean);
    }

  private:
    std::uint64_t poisson_chunk(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        std::uint64_t n = 0;
        double prod = uniform_pos();
        while (prod > limit) {
            ++n;
            prod *= uniform_pos();
        }
        return n;
    }

    void refill() {
        std::uint32_t x0 = c0_, x1 = c1_, x2 = c2_, x3 = c3_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t m0 = 0xD2511F53ULL * x0;
            const std::uint64_t m1 = 0xCD9E8D57ULL * x2;
            const std::uint32_t lo0 = static_cast<std::uint32_t>(m0);
            const std::uint32_t hi0 = static_cast<std::uint32_t>(m0 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(m1);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(m1 >> 32);
            x0 = hi1 ^ x1 ^ k0;
            x1 = lo1;
            const std::uint32_t nx2 = hi0 ^ x3 ^ k1;
            x3 = lo0;
            x2 = nx2;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        buf_[0] = x0;
        buf_[1] = x1;
        buf_[2] = x2;
        buf_[3] = x3;
        have_ = 4;
        ++c0_;  // next block in this stream
    }

    std::uint32_t key0_, key1_;
    std::uint32_t c0_ = 0, c1_, c2_, c3_;
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int have_ = 0;
};

}  // namespace asepqj
