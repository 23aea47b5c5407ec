#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "div2d/arith.hpp"
#include "div2d/pair.hpp"

namespace div2d {

// Sieve-backed counts d(a,b;n) for n <= n_max plus exact prefix anchors of
// D(a,b;n) at fixed block boundaries. Sweep-style evaluators (moment sums,
// mean-square integrals) walk blocks from their anchors, which keeps the
// partition independent of the worker count and the results bit-identical
// under parallelism.
class DivisorTable {
public:
    static constexpr std::uint64_t kBlock = 1u << 14;

    DivisorTable(const DivisorPair& p, std::uint64_t n_max,
                 std::uint64_t budget = kTableBudget);

    const DivisorPair& pair() const { return pair_; }
    std::uint64_t n_max() const { return n_max_; }
    std::uint32_t d(std::uint64_t n) const { return counts_[n]; }

    // exact D(a,b;n) at block starts: anchor(i) = D(i * kBlock)
    std::uint64_t anchor(std::uint64_t i) const { return anchors_[i]; }

    // D(a,b;n) for n <= n_max (walks at most one block from an anchor)
    std::uint64_t count(std::uint64_t n) const;

    // Deterministic block-parallel sweep: sum of term(n, D(n)) over
    // n in [1, N]. Per-block Kahan partials merged in block order.
    double sweep(std::uint64_t N,
                 const std::function<double(std::uint64_t, std::uint64_t)>& term,
                 unsigned threads = 1) const;

private:
    DivisorPair pair_;
    std::uint64_t n_max_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> anchors_;
};

}  // namespace div2d
