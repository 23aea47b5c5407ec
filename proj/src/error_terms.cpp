#include "div2d/error_terms.hpp"

#include <cmath>

#include "div2d/iroot.hpp"
#include "div2d/ksum.hpp"
#include "div2d/psi.hpp"
#include "div2d/psi_integrals.hpp"

namespace div2d {

namespace {

// Compensated main-term evaluation. Delta = D - M with D ~ M ~ zeta(2) x is a
// designed cancellation; at x ~ 1e6 the bare product roundings (and the log
// rounding on the diagonal) already cost ~1e-9, which the identity suites
// would see. The fma residuals and an exp-corrected log keep the main term
// accurate to ~ulp(Delta).
struct Dd {
    double hi, lo;
};

Dd two_sum(double a, double b) {
    double s = a + b;
    double t = s - a;
    return {s, (a - (s - t)) + (b - t)};
}

Dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

// log(x) with a first-order correction term: exp(lx) lands within a couple
// ulp of x, and the exact division recovers the residual of lx itself
Dd log_dd(double x) {
    double lx = std::log(x);
    double corr = (x - std::exp(lx)) / x;
    return {lx, corr};
}

Dd main_term_dd(const ZetaContext& ctx, const DivisorPair& p, double x) {
    if (p.diagonal()) {
        Dd lx = log_dd(x);
        Dd t1 = two_prod(x, lx.hi);
        t1.lo += x * lx.lo;
        Dd t2 = two_prod(2.0 * ctx.gamma() - 1.0, x);
        Dd s = two_sum(t1.hi, t2.hi);
        return {s.hi, s.lo + t1.lo + t2.lo};
    }
    double a = p.a(), b = p.b();
    Dd t1 = two_prod(ctx.zeta(b / a), std::pow(x, 1.0 / a));
    Dd t2 = two_prod(ctx.zeta(a / b), std::pow(x, 1.0 / b));
    Dd s = two_sum(t1.hi, t2.hi);
    return {s.hi, s.lo + t1.lo + t2.lo};
}

}  // namespace

std::uint64_t count_exact(const DivisorPair& p, double x) {
    if (x < 1.0) return 0;
    std::uint64_t X = (std::uint64_t)std::floor(x);
    int a = p.a(), b = p.b();
    std::uint64_t K = floor_kth_root(X, a + b);
    std::uint64_t s1 = 0, s2 = 0;
    for (std::uint64_t m = 1; m <= K; ++m) {
        s1 += floor_kth_root(X / ipow(m, a), b);
        s2 += floor_kth_root(X / ipow(m, b), a);
    }
    return s1 + s2 - K * K;
}

double main_term(const ZetaContext& ctx, const DivisorPair& p, double x) {
    if (x < 1.0) throw std::invalid_argument("main_term: x >= 1");
    if (p.diagonal()) return x * std::log(x) + (2.0 * ctx.gamma() - 1.0) * x;
    double a = p.a(), b = p.b();
    return ctx.zeta(b / a) * std::pow(x, 1.0 / a) +
           ctx.zeta(a / b) * std::pow(x, 1.0 / b);
}

DeltaEval delta_eval(const ZetaContext& ctx, const DivisorPair& p, double x) {
    DeltaEval e{x, count_exact(p, x), main_term(ctx, p, x), 0.0, p};
    Dd m = main_term_dd(ctx, p, x);
    e.delta = ((double)e.count - m.hi) - m.lo;
    return e;
}

namespace {

// psi((x/d)^{1/k}) with the floor supplied exactly; for k = 1 the division
// residual is folded back in (the psi slope is 1, and the floor was settled
// in integer arithmetic, so the correction never crosses a jump)
double psi_root_term(double x, std::uint64_t d, int k, std::uint64_t flr) {
    double u, err = 0.0;
    if (k == 1) {
        u = x / (double)d;
        err = std::fma(-u, (double)d, x) / (double)d;
    } else if (k == 2) {
        u = std::sqrt(x / (double)d);
    } else if (k == 3) {
        u = std::cbrt(x / (double)d);
    } else {
        u = std::pow(x / (double)d, 1.0 / k);
    }
    return psi_floored(u, (double)flr) + err;
}

}  // namespace

double psi_sum(const DivisorPair& p, double x) {
    std::uint64_t X = (std::uint64_t)std::floor(x);
    int a = p.a(), b = p.b();
    std::uint64_t K = floor_kth_root(X, a + b);
    Kahan acc;
    for (std::uint64_t n = 1; n <= K; ++n) {
        std::uint64_t nb = ipow(n, b), na = ipow(n, a);
        acc.add(psi_root_term(x, nb, a, floor_kth_root(X / nb, a)));
        acc.add(psi_root_term(x, na, b, floor_kth_root(X / na, b)));
    }
    return acc.value();
}

double remainder_from_definition(const ZetaContext& ctx, const DivisorPair& p,
                                 double x) {
    return delta_eval(ctx, p, x).delta + psi_sum(p, x);
}

RemainderEval remainder_exact(const ZetaContext& ctx, const DivisorPair& p,
                              double x, double check_tol) {
    if (x < 1.0) throw std::invalid_argument("remainder_exact: x >= 1");
    double a = p.a(), b = p.b();
    std::uint64_t X = (std::uint64_t)std::floor(x);
    std::uint64_t K = floor_kth_root(X, p.sum());
    double y = std::pow(x, 1.0 / p.sum());
    double psi_y = psi_floored(y, (double)K);

    RemainderEval r;
    r.x = x;
    r.tail_a = tail_integral_psi1_from(ctx, y, b / a);
    r.tail_b = tail_integral_psi1_from(ctx, y, a / b);
    r.r_value = -((a + b) * (a + b) / (a * b)) * psi1_of_psi(psi_y) +
                (b * (a + b) / (a * a)) * std::pow(x, 1.0 / a) * r.tail_a +
                (a * (a + b) / (b * b)) * std::pow(x, 1.0 / b) * r.tail_b;

    // differentiability: x^{1/(a+b)} integer <=> x = K^{a+b} exactly
    bool at_integer_root = (x == (double)ipow(K, p.sum()));
    if (!at_integer_root) r.r_prime = remainder_derivative(ctx, p, x);

    if (check_tol > 0.0) {
        double from_def = remainder_from_definition(ctx, p, x);
        if (std::abs(from_def - r.r_value) > check_tol)
            throw IdentityViolation(
                "remainder_exact: definition and closed form disagree at x = " +
                std::to_string(x) + " by " +
                std::to_string(from_def - r.r_value));
    }
    return r;
}

double remainder_derivative(const ZetaContext& ctx, const DivisorPair& p,
                            double x) {
    (void)ctx;
    double a = p.a(), b = p.b();
    std::uint64_t X = (std::uint64_t)std::floor(x);
    std::uint64_t K = floor_kth_root(X, p.sum());
    if (x == (double)ipow(K, p.sum()))
        throw std::domain_error(
            "remainder_derivative: undefined when x^{1/(a+b)} is an integer");
    double y = std::pow(x, 1.0 / p.sum());
    double psi_y = psi_floored(y, (double)K);
    return -((a + b) / (a * b)) * psi_y * std::pow(x, 1.0 / (a + b) - 1.0) -
           ((a * a + b * b) / (a * b)) * psi1_of_psi(psi_y) / x -
           ((a + b) / 12.0) / x;
}

}  // namespace div2d
