#pragma once

#include <cmath>
#include <cstdint>

namespace div2d {

// r^k <= y, evaluated without overflow.
inline bool pow_leq(std::uint64_t r, int k, std::uint64_t y) {
    if (r <= 1) return r <= y || k == 0;
    std::uint64_t acc = 1;
    for (int i = 0; i < k; ++i) {
        if (acc > y / r) return false;
        acc *= r;
    }
    return acc <= y;
}

// floor(y^(1/k)), exact: floating-point pow is only a seed, the correction
// loops establish r^k <= y < (r+1)^k in integer arithmetic. A one-ULP error
// here flips hyperbola counts and destroys the 1e-9 identity checks.
inline std::uint64_t floor_kth_root(std::uint64_t y, int k) {
    if (y == 0) return 0;
    if (k == 1) return y;
    std::uint64_t r = (std::uint64_t)std::pow((double)y, 1.0 / k);
    if (r > 1) r -= 1;  // start below, the seed can overshoot
    while (pow_leq(r + 1, k, y)) ++r;
    while (r > 0 && !pow_leq(r, k, y)) --r;
    return r;
}

// exact r^k in 64 bits (caller ensures no overflow)
inline std::uint64_t ipow(std::uint64_t r, int k) {
    std::uint64_t acc = 1;
    for (int i = 0; i < k; ++i) acc *= r;
    return acc;
}

}  // namespace div2d
