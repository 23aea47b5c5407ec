#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace div2d {

// Kahan-Neumaier compensated accumulator. All long sums over n go through
// this; identity residuals target 1e-9..1e-12 in plain binary64.
class Kahan {
public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

// Deterministic block-parallel reduction over [lo, hi]. The range is cut at
// fixed boundaries (independent of the worker count) and per-block partials
// are merged in block order, so the result is bit-identical for any number
// of threads. block_fn(blo, bhi) returns the block's own compensated sum.
inline double block_sum(std::uint64_t lo, std::uint64_t hi,
                        const std::function<double(std::uint64_t, std::uint64_t)>& block_fn,
                        unsigned threads = 1, std::uint64_t block = 1u << 16) {
    if (lo > hi) return 0.0;
    std::uint64_t nblocks = (hi - lo) / block + 1;
    std::vector<double> partial(nblocks, 0.0);
    auto run = [&](std::uint64_t bi) {
        std::uint64_t blo = lo + bi * block;
        std::uint64_t bhi = std::min(hi, blo + block - 1);
        partial[bi] = block_fn(blo, bhi);
    };
    if (threads <= 1 || nblocks == 1) {
        for (std::uint64_t bi = 0; bi < nblocks; ++bi) run(bi);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = (nblocks + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t b0 = t * per, b1 = std::min(nblocks, b0 + per);
            if (b0 >= b1) break;
            pool.emplace_back([&, b0, b1] {
                for (std::uint64_t bi = b0; bi < b1; ++bi) run(bi);
            });
        }
        for (auto& th : pool) th.join();
    }
    Kahan total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace div2d
