#include "div2d/arith.hpp"

#include <cmath>

#include "div2d/iroot.hpp"

namespace div2d {

namespace {

// Enumerate representations n = h^a r^b. r determines h (at most one integer
// a-th root), so iterating r up to n^{1/b} visits every representation once.
// fn(h, r) is called per representation.
template <typename F>
void for_each_rep(const DivisorPair& p, std::uint64_t n, F&& fn) {
    int a = p.a(), b = p.b();
    if (n == 0) throw std::invalid_argument("for_each_rep: n must be >= 1");
    if (a == 1 && b == 1) {
        // plain divisor pairs, O(sqrt(n))
        for (std::uint64_t h = 1; h * h <= n; ++h) {
            if (n % h == 0) {
                fn(h, n / h);
                if (h != n / h) fn(n / h, h);
            }
        }
        return;
    }
    for (std::uint64_t r = 1;; ++r) {
        std::uint64_t rb = ipow(r, b);
        if (rb > n) break;
        if (n % rb != 0) continue;
        std::uint64_t m = n / rb;
        if (a == 1) {
            fn(m, r);
        } else {
            std::uint64_t h = floor_kth_root(m, a);
            if (ipow(h, a) == m) fn(h, r);
        }
    }
}

void check_budget(std::uint64_t N, std::uint64_t budget) {
    if (N + 1 > budget)
        throw CapacityError("table of " + std::to_string(N + 1) +
                            " entries exceeds budget " + std::to_string(budget));
}

}  // namespace

std::uint64_t d_ab(const DivisorPair& p, std::uint64_t n) {
    std::uint64_t c = 0;
    for_each_rep(p, n, [&](std::uint64_t, std::uint64_t) { ++c; });
    return c;
}

double d_star(const DivisorPair& p, std::uint64_t n) {
    int a = p.a(), b = p.b();
    double s = 0.0;
    for_each_rep(p, n, [&](std::uint64_t h, std::uint64_t r) {
        s += std::pow((double)h, a - 1) * std::pow((double)r, b - 1);
    });
    return s;
}

double g_ab(const DivisorPair& p, std::uint64_t n) {
    if (p.diagonal())
        throw std::invalid_argument("g_ab: stated for a < b only");
    double a = p.a(), b = p.b();
    double ea = -(a + 2.0 * b) / (2.0 * a + 2.0 * b);
    double eb = -(b + 2.0 * a) / (2.0 * a + 2.0 * b);
    double s = 0.0;
    for_each_rep(p, n, [&](std::uint64_t h, std::uint64_t r) {
        s += std::pow((double)h, ea) * std::pow((double)r, eb);
    });
    return s;
}

std::vector<std::uint32_t> sieve_d_ab(const DivisorPair& p, std::uint64_t N,
                                      std::uint64_t budget) {
    if (N < 1) throw std::invalid_argument("sieve_d_ab: N must be >= 1");
    check_budget(N, budget);
    int a = p.a(), b = p.b();
    std::vector<std::uint32_t> d(N + 1, 0);
    for (std::uint64_t h = 1;; ++h) {
        std::uint64_t ha = ipow(h, a);
        if (ha > N) break;
        for (std::uint64_t r = 1;; ++r) {
            std::uint64_t v = ha * ipow(r, b);
            if (v > N) break;
            ++d[v];
        }
    }
    return d;
}

std::vector<double> d_star_table(const DivisorPair& p, std::uint64_t N,
                                 std::uint64_t budget) {
    if (N < 1) throw std::invalid_argument("d_star_table: N must be >= 1");
    check_budget(N, budget);
    int a = p.a(), b = p.b();
    std::vector<double> t(N + 1, 0.0);
    for (std::uint64_t h = 1;; ++h) {
        std::uint64_t ha = ipow(h, a);
        if (ha > N) break;
        double wh = std::pow((double)h, a - 1);
        for (std::uint64_t r = 1;; ++r) {
            std::uint64_t v = ha * ipow(r, b);
            if (v > N) break;
            t[v] += wh * std::pow((double)r, b - 1);
        }
    }
    return t;
}

std::vector<double> g_ab_table(const DivisorPair& p, std::uint64_t N,
                               std::uint64_t budget) {
    if (p.diagonal())
        throw std::invalid_argument("g_ab_table: stated for a < b only");
    if (N < 1) throw std::invalid_argument("g_ab_table: N must be >= 1");
    check_budget(N, budget);
    double a = p.a(), b = p.b();
    double ea = -(a + 2.0 * b) / (2.0 * a + 2.0 * b);
    double eb = -(b + 2.0 * a) / (2.0 * a + 2.0 * b);
    std::vector<double> t(N + 1, 0.0);
    for (std::uint64_t h = 1;; ++h) {
        std::uint64_t ha = ipow(h, p.a());
        if (ha > N) break;
        double wh = std::pow((double)h, ea);
        for (std::uint64_t r = 1;; ++r) {
            std::uint64_t v = ha * ipow(r, p.b());
            if (v > N) break;
            t[v] += wh * std::pow((double)r, eb);
        }
    }
    return t;
}

}  // namespace div2d
