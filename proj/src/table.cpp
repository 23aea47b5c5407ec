#include "div2d/table.hpp"

#include <stdexcept>
#include <thread>

#include "div2d/ksum.hpp"

namespace div2d {

DivisorTable::DivisorTable(const DivisorPair& p, std::uint64_t n_max,
                           std::uint64_t budget)
    : pair_(p), n_max_(n_max), counts_(sieve_d_ab(p, n_max, budget)) {
    std::uint64_t nblocks = n_max_ / kBlock + 2;
    anchors_.assign(nblocks, 0);
    std::uint64_t run = 0;
    for (std::uint64_t n = 1; n <= n_max_; ++n) {
        run += counts_[n];
        if ((n + 1) % kBlock == 0) anchors_[(n + 1) / kBlock] = run;
    }
    anchors_[0] = 0;
}

std::uint64_t DivisorTable::count(std::uint64_t n) const {
    if (n > n_max_) throw std::out_of_range("DivisorTable::count: n > n_max");
    std::uint64_t blk = n / kBlock;
    std::uint64_t run = anchors_[blk];
    for (std::uint64_t m = blk * kBlock; m <= n; ++m)
        if (m >= 1) run += counts_[m];
    return run;
}

double DivisorTable::sweep(
    std::uint64_t N,
    const std::function<double(std::uint64_t, std::uint64_t)>& term,
    unsigned threads) const {
    if (N > n_max_) throw std::out_of_range("DivisorTable::sweep: N > n_max");
    if (N < 1) return 0.0;
    std::uint64_t nblocks = N / kBlock + 1;
    std::vector<double> partial(nblocks, 0.0);
    auto run_block = [&](std::uint64_t bi) {
        std::uint64_t lo = bi * kBlock;          // exclusive anchor position
        std::uint64_t hi = std::min(N, lo + kBlock - 1);
        std::uint64_t D = anchors_[bi];
        Kahan acc;
        for (std::uint64_t n = (lo == 0 ? 1 : lo); n <= hi; ++n) {
            D += counts_[n];
            acc.add(term(n, D));
        }
        partial[bi] = acc.value();
    };
    if (threads <= 1 || nblocks == 1) {
        for (std::uint64_t bi = 0; bi < nblocks; ++bi) run_block(bi);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = (nblocks + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t b0 = t * per, b1 = std::min<std::uint64_t>(nblocks, b0 + per);
            if (b0 >= b1) break;
            pool.emplace_back([&, b0, b1] {
                for (std::uint64_t bi = b0; bi < b1; ++bi) run_block(bi);
            });
        }
        for (auto& th : pool) th.join();
    }
    Kahan total;
    for (double v : partial) total.add(v);
    return total.value();
}

}  // namespace div2d
