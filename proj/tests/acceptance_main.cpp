// Acceptance suite: every exact-identity oracle and residual-decay scan the
// toolkit promises, each with its tolerance and runtime budget pinned in
// code. Prints one [PASS]/[FAIL] line per criterion; exit status is the
// number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "div2d/arith.hpp"
#include "div2d/error_terms.hpp"
#include "div2d/iroot.hpp"
#include "div2d/ksum.hpp"
#include "div2d/moments.hpp"
#include "div2d/psi.hpp"
#include "div2d/psi_integrals.hpp"
#include "div2d/quadrature.hpp"
#include "div2d/report.hpp"
#include "div2d/zeta.hpp"

using namespace div2d;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int id, const std::string& name, bool pass, double elapsed,
            double limit_s, const std::string& detail) {
    bool in_time = elapsed < limit_s;
    bool ok = pass && in_time;
    if (!ok) ++g_failures;
    std::printf("[%s] %2d. %-34s %s [%.1fs / limit %.0fs]\n",
                ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), elapsed,
                limit_s);
    std::fflush(stdout);
}

QuadratureSpec unit_breaks(double x, double tol = 1e-13) {
    QuadratureSpec s;
    s.abs_tol = tol;
    for (std::uint64_t m = 1; (double)m <= x; ++m)
        s.breakpoints.push_back((double)m);
    return s;
}

std::string fmt(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

// ---- 1. psi-power closed forms vs quadrature --------------------------------
void criterion1() {
    Timer t;
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> U(1.0, 100.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double x = U(rng);
        for (int k = 1; k <= 3; ++k) {
            for (Parity par : {Parity::Odd, Parity::Even}) {
                int m = par == Parity::Odd ? 2 * k - 1 : 2 * k;
                double quad = integrate(
                    [m](double u) { return std::pow(psi(u), m); }, 1.0, x,
                    unit_breaks(x));
                worst = std::max(worst,
                                 std::abs(psi_power_integral(k, par, x) - quad));
            }
        }
    }
    report(1, "psi powers (2.5)/(2.6)", worst <= 1e-10, t.seconds(), 5.0,
           "max |closed - quad| = " + fmt(worst) + " <= 1e-10");
}

// ---- 2. W_alpha exact vs quadrature; asymptotic error constant --------------
void criterion2() {
    Timer t;
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> U(1.0, 200.0);
    ZetaContext ctx;
    double worst = 0.0;
    const double alphas[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5};
    for (double alpha : alphas)
        for (int i = 0; i < 20; ++i) {
            double x = U(rng);
            double quad = integrate(
                [alpha](double u) { return std::pow(u, alpha) * psi(u); }, 1.0, x,
                unit_breaks(x));
            worst = std::max(worst, std::abs(w_alpha_exact(alpha, x).value - quad));
        }
    double cmax = 0.0;
    for (double alpha : alphas) {
        if (alpha == -1.0 || alpha == -2.0) continue;
        for (double x = 128.0; x <= 131072.0; x *= 2.0) {
            double err = std::abs(w_alpha_exact(alpha, x).value -
                                  w_alpha_asymptotic(ctx, alpha, x));
            cmax = std::max(cmax, err / std::pow(x, alpha - 1.0));
        }
    }
    report(2, "W_alpha suite (2.9)-(2.18)", worst <= 1e-9 && cmax <= 8.0,
           t.seconds(), 10.0,
           "max |exact - quad| = " + fmt(worst) + " <= 1e-9, measured C = " +
               fmt(cmax) + " <= 8");
}

// ---- 3. I-integral closed form vs quadrature oracle -------------------------
void criterion3() {
    Timer t;
    std::mt19937_64 rng(103);
    double worst = 0.0;
    int count = 0;
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        DivisorPair p(a, b);
        for (std::uint64_t n : {1ull, 2ull, 3ull}) {
            double lo = (double)ipow(n, p.sum());
            if (lo >= 499.0) continue;
            std::uniform_real_distribution<double> X(lo + 0.5, 500.0);
            for (double alpha : {0.0, 1.0 / a - 1.0, 1.0 / b - 1.0})
                for (int i = 0; i < 7; ++i) {
                    double x = X(rng);
                    auto spec = psi_product_spec(p, n, x, 1e-12);
                    double q = quad_psi_product(p, n, alpha, x, spec);
                    double c = i_integral_closed(p, n, alpha, x);
                    worst = std::max(worst, std::abs(q - c));
                    ++count;
                }
        }
    }
    report(3, "Lemma 4.1 oracle equivalence", worst <= 1e-8 && count >= 150,
           t.seconds(), 60.0,
           std::to_string(count) + " instances, max diff = " + fmt(worst) +
               " <= 1e-8");
}

// ---- 4. Lemma 3.1 dual path + (3.4) shape -----------------------------------
void criterion4() {
    Timer t;
    ZetaContext ctx;
    std::mt19937_64 rng(104);
    std::uniform_real_distribution<double> X(2.0, 1e6);
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 1}}) {
        DivisorPair p(a, b);
        for (int i = 0; i < 100; ++i) {
            double x = X(rng);
            RemainderEval r = remainder_exact(ctx, p, x, 0.0);
            worst = std::max(worst, std::abs(remainder_from_definition(ctx, p, x) -
                                             r.r_value));
        }
    }
    // (3.4): residual times x^{1/(a+b)} bounded across decades
    bool shape_ok = true;
    double shape_worst_ratio = 0.0;
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}}) {
        DivisorPair p(a, b);
        double base = 0.0, worst_norm = 0.0;
        RunConfig grid_cfg;
        grid_cfg.x_min = 1e2;
        grid_cfg.x_max = 1e6;
        for (double x : make_grid(grid_cfg)) {
            RemainderEval r = remainder_exact(ctx, p, x, 0.0);
            double y = std::pow(x, 1.0 / p.sum());
            double res = r.r_value +
                         ((double)p.sum() * p.sum() / (a * b)) * psi1(y) +
                         (a * a + b * b) / (12.0 * (double)a * b);
            double norm = std::abs(res) * std::pow(x, 1.0 / p.sum());
            if (x < 1e3) base = std::max(base, norm);
            worst_norm = std::max(worst_norm, norm);
        }
        shape_worst_ratio = std::max(shape_worst_ratio, worst_norm / base);
        if (worst_norm > 3.0 * base) shape_ok = false;
    }
    report(4, "Lemma 3.1 dual path + (3.4)", worst <= 1e-8 && shape_ok,
           t.seconds(), 60.0,
           "max |def - (3.3)| = " + fmt(worst) + " <= 1e-8, shape ratio = " +
               fmt(shape_worst_ratio) + " <= 3");
}

// ---- 5. Lemma 2.1 identity ---------------------------------------------------
void criterion5() {
    Timer t;
    ZetaContext ctx;
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}}) {
        DivisorPair p(a, b);
        auto f = [&](std::uint64_t n) { return (double)d_ab(p, n); };
        auto g = [&](double u) { return main_term(ctx, p, u); };
        auto gp = [&](double u) {
            if (p.diagonal()) return std::log(u) + 2.0 * ctx.gamma();
            return ctx.zeta((double)b / a) / a * std::pow(u, 1.0 / a - 1.0) +
                   ctx.zeta((double)a / b) / b * std::pow(u, 1.0 / b - 1.0);
        };
        for (int k : {1, 2, 3})
            for (double x : {10.0, 50.0, 200.0})
                worst = std::max(worst, std::abs(furuya_residual(f, g, gp, k, x)));
    }
    report(5, "Lemma 2.1 summation identity", worst <= 1e-8, t.seconds(), 30.0,
           "max residual = " + fmt(worst) + " <= 1e-8");
}

// ---- 6. hyperbola vs sieve over every integer x <= 1e6 -----------------------
void criterion6() {
    Timer t;
    bool ok = true;
    std::string bad;
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 1}}) {
        DivisorPair p(a, b);
        const std::uint64_t N = 1000000;
        auto s = sieve_d_ab(p, N);
        std::vector<std::uint64_t> prefix(N + 1, 0);
        for (std::uint64_t n = 1; n <= N; ++n) prefix[n] = prefix[n - 1] + s[n];
        std::uint64_t mismatches = (std::uint64_t)block_sum(
            1, N,
            [&](std::uint64_t lo, std::uint64_t hi) {
                double miss = 0;
                for (std::uint64_t x = lo; x <= hi; ++x)
                    if (count_exact(p, (double)x) != prefix[x]) miss += 1;
                return miss;
            },
            2);
        if (mismatches) {
            ok = false;
            bad += " " + p.str() + ":" + std::to_string(mismatches);
        }
    }
    report(6, "hyperbola vs sieve to 1e6", ok, t.seconds(), 30.0,
           ok ? "all integer x agree for (1,2),(2,3),(1,1)"
              : ("mismatches:" + bad));
}

// ---- scan helper with first-decade drift alarm -------------------------------
struct ScanOutcome {
    double baseline = 0.0;
    double worst = 0.0;
    std::vector<MomentReport> points;
};

template <typename Lhs, typename Rhs, typename Norm>
ScanOutcome drift_scan(double x_min, double x_max, Lhs lhs_fn, Rhs rhs_fn,
                       Norm norm_fn) {
    RunConfig cfg;
    cfg.x_min = x_min;
    cfg.x_max = x_max;
    ScanOutcome out;
    for (double x : make_grid(cfg)) {
        MomentReport r;
        r.x = x;
        r.discrete_sum = lhs_fn(x);
        r.rhs_main = rhs_fn(x, &r.continuous_integral);
        r.residual = r.discrete_sum - r.rhs_main;
        r.normalized_residual = r.residual / norm_fn(x);
        if (x < 10.0 * x_min)
            out.baseline = std::max(out.baseline, std::abs(r.normalized_residual));
        out.worst = std::max(out.worst, std::abs(r.normalized_residual));
        out.points.push_back(r);
    }
    return out;
}

// ---- 7. Theorem 1 scan (1,2) --------------------------------------------------
void criterion7() {
    Timer t;
    ZetaContext ctx;
    DivisorPair p(1, 2);
    DivisorTable table(p, 1000002);
    auto outcome = drift_scan(
        1e3, 1e6,
        [&](double x) { return discrete_moment(ctx, p, table, x, 2, 2); },
        [&](double x, double* cont) {
            SeriesTruncation tr = make_truncation(
                ctx, p, std::max<std::uint64_t>(10000, (std::uint64_t)x));
            *cont = continuous_mean_square(ctx, p, table, x, 2);
            return theorem1_rhs(ctx, p, table, x, tr, 2);
        },
        [](double x) { return std::sqrt(x); });
    bool ok = outcome.worst <= 3.0 * outcome.baseline;
    report(7, "Theorem 1 scan (1,2)", ok, t.seconds(), 300.0,
           "normalized |res|/x^{1/2}: first decade " + fmt(outcome.baseline) +
               ", max " + fmt(outcome.worst) + " <= 3x");
}

// ---- 8. Theorem 2 scan (1,1) --------------------------------------------------
void criterion8() {
    Timer t;
    ZetaContext ctx;
    DivisorPair p(1, 1);
    DivisorTable table(p, 1000002);
    auto outcome = drift_scan(
        1e3, 1e6,
        [&](double x) { return discrete_moment(ctx, p, table, x, 2, 2); },
        [&](double x, double* cont) {
            SeriesTruncation tr = make_truncation(
                ctx, p, std::max<std::uint64_t>(10000, (std::uint64_t)x));
            *cont = continuous_mean_square(ctx, p, table, x, 2);
            return theorem2_rhs(ctx, table, x, tr, 2);
        },
        [](double x) { return std::sqrt(x) * std::log(x); });
    bool ok = outcome.worst <= 3.0 * outcome.baseline;
    report(8, "Theorem 2 scan (1,1)", ok, t.seconds(), 300.0,
           "normalized |res|/(sqrt(x) log x): first decade " +
               fmt(outcome.baseline) + ", max " + fmt(outcome.worst) + " <= 3x");
}

// ---- 9. Corollary 2 at desk scale ---------------------------------------------
void criterion9() {
    Timer t;
    ZetaContext ctx;
    DivisorPair p(1, 2);
    DivisorTable table(p, 10000002);
    double x = 1e7;
    double lhs = discrete_moment(ctx, p, table, x, 2, 2);
    SeriesTruncation tr = make_truncation(ctx, p, 100000);
    double cab = c_ab_constant(ctx, p, tr);
    double ratio = lhs / std::pow(x, 4.0 / 3.0);
    double rel = std::abs(ratio - cab) / cab;
    report(9, "Corollary 2 desk scale (1,2)", rel <= 0.05, t.seconds(), 600.0,
           "sum/x^{4/3} = " + fmt(ratio) + " vs c_ab = " + fmt(cab) +
               ", rel = " + fmt(rel) + " <= 0.05");
}

// ---- 10. Voronoi scan (Lemma 2.2, q=1) ----------------------------------------
void criterion10() {
    Timer t;
    ZetaContext ctx;
    DivisorPair p(1, 2);
    DivisorTable table(p, 1000002);
    auto outcome = drift_scan(
        1e3, 1e6,
        [&](double x) { return delta_integral(ctx, p, table, x); },
        [&](double x, double* cont) {
            *cont = 0.0;
            SeriesTruncation tr = make_truncation(
                ctx, p, std::max<std::uint64_t>(10000, (std::uint64_t)x));
            return voronoi_integral(ctx, p, x, tr);
        },
        [](double x) { return std::sqrt(x); });
    bool ok = outcome.worst <= 3.0 * outcome.baseline;
    report(10, "Voronoi scan (1,2)", ok, t.seconds(), 300.0,
           "normalized |res|/x^{1/2}: first decade " + fmt(outcome.baseline) +
               ", max " + fmt(outcome.worst) + " <= 3x");
}

// ---- 11. first-moment ratios ---------------------------------------------------
void criterion11() {
    Timer t;
    ZetaContext ctx;
    DivisorPair p12(1, 2), p23(2, 3);
    DivisorTable t12(p12, 1000002), t23(p23, 1000002);
    double r12 = discrete_moment(ctx, p12, t12, 1e6, 1, 2) / 1e6;
    double want12 = 0.25 + 0.5 * ctx.zeta(2.0);
    double rel12 = std::abs(r12 - want12) / want12;
    double r23 = discrete_moment(ctx, p23, t23, 1e6, 1, 2) / 1e6;
    double rel23 = std::abs(r23 - 0.25) / 0.25;
    bool ok = rel12 <= 0.02 && rel23 <= 0.02;
    report(11, "first-moment ratios (1.16)/(1.17)", ok, t.seconds(), 120.0,
           "(1,2): rel " + fmt(rel12) + " <= 0.02; (2,3): rel " + fmt(rel23) +
               " <= 0.02" +
               (rel23 > 0.02 ? " -- (1.17) error is Omega(x^{-1/10}) by the "
                               "paper's own lower bound; 2% at x=1e6 is out of "
                               "reach (see notes)"
                             : ""));
}

// ---- 12. determinism of cmd_scan ------------------------------------------------
void criterion12() {
    Timer t;
    auto slurp = [](const std::string& path) {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    std::string base = std::string(DIV2D_CLI_PATH) +
                       " scan --target corollary1 --pair 1,2 --xmin 100 "
                       "--xmax 50000 --trunc 1000 --threads 4 --out ";
    int rc1 = WEXITSTATUS(std::system((base + "/tmp/div2d_det_a.csv").c_str()));
    int rc2 = WEXITSTATUS(std::system((base + "/tmp/div2d_det_b.csv").c_str()));
    std::string a = slurp("/tmp/div2d_det_a.csv");
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() &&
              a == slurp("/tmp/div2d_det_b.csv");
    report(12, "scan determinism (threads=4)", ok, t.seconds(), 120.0,
           ok ? "two runs byte-identical" : "outputs differ");
}

}  // namespace

int main() {
    std::printf("acceptance suite: exact-identity oracles and residual scans\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures;
}
