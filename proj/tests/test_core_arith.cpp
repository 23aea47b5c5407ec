#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "div2d/arith.hpp"
#include "div2d/iroot.hpp"
#include "div2d/ksum.hpp"
#include "div2d/pair.hpp"
#include "div2d/psi.hpp"
#include "div2d/zeta.hpp"

using namespace div2d;

TEST_CASE("divisor pair invariants") {
    CHECK(DivisorPair(1, 1).diagonal());
    CHECK_FALSE(DivisorPair(1, 2).diagonal());
    CHECK(DivisorPair(2, 3).sum() == 5);
    CHECK_THROWS_AS(DivisorPair(2, 1), std::invalid_argument);   // ordering
    CHECK_THROWS_AS(DivisorPair(2, 4), std::invalid_argument);   // gcd
    CHECK_THROWS_AS(DivisorPair(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(DivisorPair(2, 2), std::invalid_argument);
}

TEST_CASE("psi evaluation") {
    CHECK(psi_eval(3.0).psi == -0.5);
    PsiState s = psi_eval(2.75);
    CHECK(s.psi == 0.25);
    CHECK(s.psi1 == (0.0625 - 0.25) / 2.0);
    // psi_2(2) = -1/12: also the quadrature of psi_1 over [1,2]
    CHECK(psi_eval(2.0).psi2 == doctest::Approx(-1.0 / 12).epsilon(1e-15));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 5000.0);
    for (int i = 0; i < 1000; ++i) {
        double u = U(rng);
        PsiState p = psi_eval(u);
        CHECK(p.psi >= -0.5);
        CHECK(p.psi < 0.5);
        CHECK(p.psi == u - std::floor(u) - 0.5);
        CHECK(p.psi1 >= -0.125);
        CHECK(p.psi1 <= 0.0);
        CHECK(p.psi1 == 0.5 * (p.psi * p.psi - 0.25));
        // 1-periodicity of psi
        CHECK(psi(u + 1.0) == doctest::Approx(p.psi).epsilon(1e-12));
    }
    for (int n = 1; n <= 100; ++n) CHECK(psi1((double)n) == 0.0);
}

namespace {

// brute-force lattice enumeration, independent of the library's loops
std::uint64_t d_brute(int a, int b, std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t h = 1; ipow(h, a) <= n; ++h)
        for (std::uint64_t r = 1; ipow(h, a) * ipow(r, b) <= n; ++r)
            if (ipow(h, a) * ipow(r, b) == n) ++c;
    return c;
}

}  // namespace

TEST_CASE("d_ab examples and brute-force cross-check") {
    CHECK(d_ab(DivisorPair(1, 1), 6) == 4);
    CHECK(d_ab(DivisorPair(1, 2), 4) == 2);
    CHECK(d_ab(DivisorPair(1, 2), 1) == 1);
    CHECK_THROWS(d_ab(DivisorPair(1, 2), 0));

    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {1, 3}}) {
        DivisorPair p(a, b);
        for (std::uint64_t n = 1; n <= 1500; ++n)
            CHECK(d_ab(p, n) == d_brute(a, b, n));
    }
}

TEST_CASE("sieve matches pointwise counts and lattice totals") {
    auto s11 = sieve_d_ab(DivisorPair(1, 1), 4);
    CHECK(s11[1] == 1);
    CHECK(s11[2] == 2);
    CHECK(s11[3] == 2);
    CHECK(s11[4] == 3);
    auto s12 = sieve_d_ab(DivisorPair(1, 2), 4);
    CHECK(s12[1] == 1);
    CHECK(s12[2] == 1);
    CHECK(s12[3] == 1);
    CHECK(s12[4] == 2);
    CHECK(sieve_d_ab(DivisorPair(2, 3), 1).at(1) == 1);

    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        DivisorPair p(a, b);
        const std::uint64_t N = 100000;
        auto s = sieve_d_ab(p, N);
        std::uint64_t total = 0;
        for (std::uint64_t n = 1; n <= N; ++n) total += s[n];
        // direct double loop over h^a r^b <= N
        std::uint64_t direct = 0;
        for (std::uint64_t h = 1; ipow(h, a) <= N; ++h)
            for (std::uint64_t r = 1; ipow(h, a) * ipow(r, b) <= N; ++r) ++direct;
        CHECK(total == direct);
        for (std::uint64_t n = 1; n <= 300; ++n) CHECK(s[n] == d_ab(p, n));
    }

    CHECK_THROWS_AS(sieve_d_ab(DivisorPair(1, 2), 1000, 100), CapacityError);
}

TEST_CASE("d_star examples and domination of d") {
    CHECK(d_star(DivisorPair(1, 1), 6) == 4.0);
    CHECK(d_star(DivisorPair(1, 2), 4) == 3.0);   // (m=4,r=1) -> 1, (m=1,r=2) -> 2
    CHECK(d_star(DivisorPair(1, 2), 7) == 1.0);
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}}) {
        DivisorPair p(a, b);
        for (std::uint64_t n = 1; n <= 5000; ++n)
            CHECK(d_star(p, n) >= (double)d_ab(p, n));  // each weight >= 1
    }
    // at (1,1) the weights collapse to 1
    DivisorPair p11(1, 1);
    for (std::uint64_t n = 1; n <= 2000; ++n)
        CHECK(d_star(p11, n) == (double)d_ab(p11, n));

    auto table = d_star_table(DivisorPair(1, 2), 4000);
    for (std::uint64_t n = 1; n <= 4000; ++n)
        CHECK(table[n] == d_star(DivisorPair(1, 2), n));
}

TEST_CASE("g_ab examples") {
    DivisorPair p12(1, 2), p23(2, 3);
    CHECK(g_ab(p12, 1) == 1.0);
    // two representations of 4: h=4,r=1 and h=1,r=2, exponents -5/6 and -2/3
    double expected = std::pow(4.0, -5.0 / 6.0) + std::pow(2.0, -2.0 / 3.0);
    CHECK(g_ab(p12, 4) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(g_ab(p23, 2) == 0.0);  // no h^2 r^3 = 2
    CHECK_THROWS_AS(g_ab(DivisorPair(1, 1), 5), std::invalid_argument);

    auto table = g_ab_table(p12, 2000);
    for (std::uint64_t n = 1; n <= 2000; ++n)
        CHECK(table[n] == doctest::Approx(g_ab(p12, n)).epsilon(1e-14));
}

TEST_CASE("zeta values and Bernoulli table") {
    ZetaContext ctx;
    const double pi = 3.14159265358979323846;
    CHECK(ctx.zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
    CHECK(ctx.zeta(0.5) == doctest::Approx(-1.4603545088095868).epsilon(1e-12));
    CHECK(ctx.zeta(1.5) == doctest::Approx(2.6123753486854883).epsilon(1e-12));
    // doubled-truncation oracle, run independently of the cache
    for (double s : {0.25, 0.5, 1.5, 2.0, 7.0 / 6.0, 4.0 / 3.0}) {
        double v = ctx.zeta(s);
        double oracle = ctx.euler_maclaurin_zeta(s, 4 * std::max(20, (int)std::ceil(10 * s)));
        CHECK(v == doctest::Approx(oracle).epsilon(1e-13));
    }
    CHECK(ctx.zeta_neg_int(0) == -0.5);
    CHECK(ctx.zeta_neg_int(1) == doctest::Approx(-1.0 / 12).epsilon(1e-15));
    for (int k = 1; k <= 8; ++k) CHECK(ctx.zeta_neg_int(2 * k) == 0.0);
    CHECK(ctx.zeta_neg_int(3) == doctest::Approx(1.0 / 120).epsilon(1e-15));
    CHECK(ctx.zeta_any(-3.0) == doctest::Approx(1.0 / 120).epsilon(1e-13));
    CHECK_THROWS_AS(ctx.zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(ctx.zeta(-0.5), std::domain_error);
    CHECK(ctx.bernoulli(2) == doctest::Approx(1.0 / 6).epsilon(1e-16));
    CHECK(ctx.bernoulli(3) == 0.0);

    // Euler constant against its own Euler-Maclaurin expansion
    const int N = 1000000;
    Kahan h;
    for (int n = 1; n <= N; ++n) h.add(1.0 / n);
    double gamma_em = h.value() - std::log((double)N) - 0.5 / N + 1.0 / (12.0 * (double)N * N);
    CHECK(ctx.gamma() == doctest::Approx(gamma_em).epsilon(1e-13));
}

TEST_CASE("integer kth root is exactly the floor") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000000; ++i) {
        std::uint64_t y = rng() >> (i % 40);  // spread of magnitudes
        int k = 2 + (int)(rng() % 5);
        std::uint64_t r = floor_kth_root(y, k);
        CHECK(pow_leq(r, k, y));
        CHECK_FALSE(pow_leq(r + 1, k, y));
    }
    // exact boundaries
    for (std::uint64_t r = 1; r <= 2000; ++r)
        for (int k = 2; k <= 4; ++k) {
            std::uint64_t p = ipow(r, k);
            CHECK(floor_kth_root(p, k) == r);
            CHECK(floor_kth_root(p - 1, k) == r - 1);
        }
}
