#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "div2d/arith.hpp"
#include "div2d/error_terms.hpp"
#include "div2d/iroot.hpp"
#include "div2d/psi.hpp"
#include "div2d/zeta.hpp"

using namespace div2d;

TEST_CASE("hyperbola count examples") {
    CHECK(count_exact(DivisorPair(1, 2), 10.0) == 13);
    CHECK(count_exact(DivisorPair(1, 1), 4.0) == 8);
    CHECK(count_exact(DivisorPair(2, 3), 0.5) == 0);
    CHECK(count_exact(DivisorPair(1, 2), 0.0) == 0);
}

TEST_CASE("hyperbola vs brute force and sieve prefix") {
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        DivisorPair p(a, b);
        std::uint64_t brute = 0;
        for (std::uint64_t x = 1; x <= 3000; ++x) {
            std::uint64_t add = 0;
            for (std::uint64_t h = 1; ipow(h, a) <= x; ++h)
                for (std::uint64_t r = 1; ipow(h, a) * ipow(r, b) <= x; ++r)
                    if (ipow(h, a) * ipow(r, b) == x) ++add;
            brute += add;
            CHECK(count_exact(p, (double)x) == brute);
        }
        const std::uint64_t N = 100000;
        auto s = sieve_d_ab(p, N);
        std::uint64_t run = 0;
        for (std::uint64_t n = 1; n <= N; ++n) {
            run += s[n];
            if (n % 37 == 0 || n < 100)
                CHECK(count_exact(p, (double)n) == run);
        }
        // non-integer x sits on the step value of floor(x)
        CHECK(count_exact(p, 1000.73) == count_exact(p, 1000.0));
    }
}

TEST_CASE("main term and delta") {
    ZetaContext ctx;
    DivisorPair p11(1, 1), p12(1, 2);
    CHECK(main_term(ctx, p11, 1.0) ==
          doctest::Approx(2.0 * ctx.gamma() - 1.0).epsilon(1e-15));
    CHECK(main_term(ctx, p12, 1.0) ==
          doctest::Approx(ctx.zeta(2.0) + ctx.zeta(0.5)).epsilon(1e-15));
    CHECK(main_term(ctx, p12, 10.0) ==
          doctest::Approx(ctx.zeta(2.0) * 10.0 + ctx.zeta(0.5) * std::sqrt(10.0))
              .epsilon(1e-15));

    DeltaEval d = delta_eval(ctx, p12, 10.0);
    CHECK(d.count == 13);
    CHECK(d.delta == doctest::Approx(13.0 - d.main).epsilon(1e-15));
    CHECK(delta_eval(ctx, p11, 1.0).delta ==
          doctest::Approx(1.0 - (2.0 * ctx.gamma() - 1.0)).epsilon(1e-14));

    // delta jumps by d(a,b;n) at integers
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint64_t> N(2, 1000000);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t n = N(rng);
        double jump = delta_eval(ctx, p12, (double)n).delta -
                      delta_eval(ctx, p12, (double)n - 1e-9).delta;
        CHECK(jump == doctest::Approx((double)d_ab(p12, n)).epsilon(1e-6));
    }
}

TEST_CASE("sharp representation: definition vs closed remainder") {
    ZetaContext ctx;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> X(2.0, 1e6);
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 1}}) {
        DivisorPair p(a, b);
        for (int i = 0; i < 100; ++i) {
            double x = X(rng);
            double lhs = remainder_from_definition(ctx, p, x);
            RemainderEval r = remainder_exact(ctx, p, x, 0.0);
            CHECK(std::abs(lhs - r.r_value) < 1e-9);
        }
    }
    // the built-in cross-check trips on an absurd tolerance
    CHECK_THROWS_AS(remainder_exact(ctx, DivisorPair(1, 2), 1234.5, 1e-30),
                    IdentityViolation);
}

TEST_CASE("remainder asymptotic shape (3.4)") {
    ZetaContext ctx;
    DivisorPair p(1, 2);
    double a = 1, b = 2;
    // r_value + ((a+b)^2/ab) psi_1(y) + (a^2+b^2)/(12ab) -> 0 like x^{-1/3}
    double first = 0.0;
    for (double x : {1e2, 1e3, 1e4, 1e5, 1e6}) {
        RemainderEval r = remainder_exact(ctx, p, x, 0.0);
        double y = std::pow(x, 1.0 / 3.0);
        double res = r.r_value + ((a + b) * (a + b) / (a * b)) * psi1(y) +
                     (a * a + b * b) / (12.0 * a * b);
        double normalized = std::abs(res) * std::pow(x, 1.0 / 3.0);
        if (first == 0.0) first = std::max(normalized, 0.1);
        CHECK(normalized < 5.0 * first);
    }
}

TEST_CASE("remainder derivative") {
    ZetaContext ctx;
    DivisorPair p(1, 2);
    // finite difference of the closed formula, step clear of breakpoints
    const double h = 1e-4;
    for (double x : {50.5, 433.3, 12003.7}) {
        double fd = (remainder_exact(ctx, p, x + h, 0.0).r_value -
                     remainder_exact(ctx, p, x - h, 0.0).r_value) / (2.0 * h);
        double main = remainder_derivative(ctx, p, x);
        // the dropped remainder of the derivative is O(x^{-1-1/3})
        CHECK(std::abs(fd - main) < 1e-5 + 10.0 * std::pow(x, -4.0 / 3.0));
    }
    // sign structure just above a cube: psi(x^{1/3}) ~ -1/2 makes the
    // leading term positive
    double x = 27.0 + 1e-6;
    CHECK(remainder_derivative(ctx, p, x) > 0.0);
    // undefined at exact integer roots; r_prime absent there
    CHECK_THROWS_AS(remainder_derivative(ctx, p, 27.0), std::domain_error);
    CHECK_FALSE(remainder_exact(ctx, p, 27.0, 0.0).r_prime.has_value());
    CHECK(remainder_exact(ctx, p, 27.5, 0.0).r_prime.has_value());
}
