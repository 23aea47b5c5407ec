#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "div2d/pair.hpp"

namespace div2d {

// Thrown when a table would exceed the configured memory budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// default budget: table entries, not bytes
inline constexpr std::uint64_t kTableBudget = std::uint64_t(1) << 28;

// d(a,b;n) = #{(h,r) : h^a r^b = n}
std::uint64_t d_ab(const DivisorPair& p, std::uint64_t n);

// d*(a,b;n) = sum over m^a r^b = n of m^{a-1} r^{b-1}; equals d(a,b;n) at (1,1)
double d_star(const DivisorPair& p, std::uint64_t n);

// g_{a,b}(n) = sum over h^a r^b = n of h^{-(a+2b)/(2a+2b)} r^{-(b+2a)/(2a+2b)}
// (the c_{a,b} series weight; stated for a < b, diagonal rejected)
double g_ab(const DivisorPair& p, std::uint64_t n);

// Bulk tables up to N (index 0 unused), built by the double loop over
// (h, r) with h^a r^b <= N.
std::vector<std::uint32_t> sieve_d_ab(const DivisorPair& p, std::uint64_t N,
                                      std::uint64_t budget = kTableBudget);
std::vector<double> d_star_table(const DivisorPair& p, std::uint64_t N,
                                 std::uint64_t budget = kTableBudget);
std::vector<double> g_ab_table(const DivisorPair& p, std::uint64_t N,
                               std::uint64_t budget = kTableBudget);

}  // namespace div2d
