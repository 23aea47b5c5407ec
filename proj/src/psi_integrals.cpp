#include "div2d/psi_integrals.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "div2d/iroot.hpp"
#include "div2d/ksum.hpp"
#include "div2d/psi.hpp"

namespace div2d {

namespace {

constexpr std::uint64_t kDirectLimit = 1000000;  // direct-summation bound
constexpr int kSeriesFrom = 8;                   // binomial series once n >= this

double ipow2(int m) { return std::ldexp(1.0, -2 * m); }  // 2^{-2m}

// int_n^{n+f} t^alpha psi(t) dt for integer n >= kSeriesFrom, f in (0, 1]:
//   n^alpha sum_{k>=0} C(alpha,k) n^{-k} (f^{k+2}/(k+2) - f^{k+1}/(2(k+1)))
// The k = 0 term vanishes at f = 1, so a full period contributes
// sum_{k>=1} C(alpha,k) n^{alpha-k} k / (2(k+1)(k+2)) with no cancellation
// between large intermediates (evaluating the antiderivative of (2.9)
// directly would lose ~x^2 eps).
double interval_series(double n, double alpha, double f) {
    double na = std::pow(n, alpha);
    double binom = 1.0;   // C(alpha, k)
    double scale = na;    // n^{alpha - k}
    double fpow = f;      // f^{k+1}
    double inv_n = 1.0 / n;
    Kahan acc;
    for (int k = 0; k <= 80; ++k) {
        double bracket = fpow * (f / (k + 2) - 0.5 / (k + 1));
        double term = binom * scale * bracket;
        acc.add(term);
        if (std::abs(term) < 1e-18 * (std::abs(acc.value()) + 1e-300) && k >= 2) break;
        binom *= (alpha - k) / (k + 1);
        scale *= inv_n;
        fpow *= f;
    }
    return acc.value();
}

// same integral from the antiderivative t^{alpha+2}/(alpha+2) - c t^{alpha+1}/(alpha+1),
// c = n + 1/2; fine at small n where there is nothing to cancel
double interval_anti(double n, double alpha, double f) {
    double c = n + 0.5;
    double u = n + f;
    auto F = [&](double t) {
        return std::pow(t, alpha + 2.0) / (alpha + 2.0) -
               c * std::pow(t, alpha + 1.0) / (alpha + 1.0);
    };
    return F(u) - F(n);
}

double interval(double n, double alpha, double f) {
    return n < (double)kSeriesFrom ? interval_anti(n, alpha, f)
                                   : interval_series(n, alpha, f);
}

double w_general(double alpha, double x) {
    std::uint64_t N = (std::uint64_t)std::floor(x);
    double f = x - (double)N;
    Kahan acc;
    for (std::uint64_t n = 1; n < N; ++n) acc.add(interval((double)n, alpha, 1.0));
    if (f > 0.0) acc.add(interval((double)N, alpha, f));
    return acc.value();
}

// W_alpha at every integer up to X in one pass (the I-integral assembles
// O(x^{1/a}) values of W_alpha at integer points; recomputing each one from
// scratch would be quadratic)
std::vector<double> w_general_prefix(double alpha, std::uint64_t X) {
    std::vector<double> w(X + 1, 0.0);
    Kahan acc;
    for (std::uint64_t n = 1; n < X; ++n) {
        acc.add(interval((double)n, alpha, 1.0));
        w[n + 1] = acc.value();
    }
    return w;
}

}  // namespace

double psi_power_integral(int k, Parity parity, double x) {
    if (k < 1) throw std::invalid_argument("psi_power_integral: k >= 1");
    if (x < 1.0) throw std::invalid_argument("psi_power_integral: x >= 1");
    double p = psi(x);
    if (parity == Parity::Odd)
        return (std::pow(p, 2 * k) - ipow2(k)) / (2 * k);
    return ((x - 1.0) * ipow2(k) - p * ipow2(k) + std::pow(p, 2 * k + 1)) /
           (2 * k + 1);
}

WAlphaResult w_alpha_exact(double alpha, double x) {
    if (x < 1.0) throw std::invalid_argument("w_alpha_exact: x >= 1");
    WAlphaResult r;
    r.alpha = alpha;
    r.x = x;
    if (alpha == -2.0) {
        r.branch = WAlphaResult::Branch::AlphaMinus2;
        r.value = std::log(x) - psi(x) / x - sum_pow(-1.0, x) + 0.5;
        return r;
    }
    if (alpha == -1.0) {
        // telescoped per-interval antiderivatives of t^{-1} psi(t):
        //   (x-1) - log(x)/2 - [(m-1) log m - log (m-1)! + m log(x/m)]
        r.branch = WAlphaResult::Branch::AlphaMinus1;
        double m = std::floor(x);
        r.value = (x - 1.0) - 0.5 * std::log(x) -
                  ((m - 1.0) * std::log(m) - std::lgamma(m) + m * std::log(x / m));
        return r;
    }
    r.branch = WAlphaResult::Branch::General;
    r.value = w_general(alpha, x);
    return r;
}

double w_alpha_asymptotic(const ZetaContext& ctx, double alpha, double x) {
    if (alpha == -1.0 || alpha == -2.0)
        throw std::domain_error("w_alpha_asymptotic: alpha in {-1,-2} excluded");
    if (x < 1.0) throw std::invalid_argument("w_alpha_asymptotic: x >= 1");
    double c = (ctx.zeta_any(-1.0 - alpha) - alpha / (2.0 * (2.0 + alpha))) /
               (alpha + 1.0);
    return c + (psi1(x) + 1.0 / 12.0) * std::pow(x, alpha);
}

double sum_pow(double beta, double x) {
    if (x < 1.0) return 0.0;
    std::uint64_t N = (std::uint64_t)std::floor(x);
    auto direct = [&](std::uint64_t hi) {
        Kahan s;
        if (beta == -1.0)
            for (std::uint64_t n = 1; n <= hi; ++n) s.add(1.0 / (double)n);
        else if (beta == 1.0)
            for (std::uint64_t n = 1; n <= hi; ++n) s.add((double)n);
        else
            for (std::uint64_t n = 1; n <= hi; ++n) s.add(std::pow((double)n, beta));
        return s.value();
    };
    if (N <= kDirectLimit) return direct(N);

    // Euler-Maclaurin bridge between the integer anchors M and N; four
    // Bernoulli terms leave a remainder ~ N^{beta-9}
    double M = (double)kDirectLimit, Nd = (double)N;
    double head = direct(kDirectLimit);
    double integral = (beta == -1.0)
                          ? std::log(Nd / M)
                          : (std::pow(Nd, beta + 1.0) - std::pow(M, beta + 1.0)) /
                                (beta + 1.0);
    double bridge = integral + 0.5 * (std::pow(Nd, beta) - std::pow(M, beta));
    static const double b2k[4] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    double fact = 2.0;     // (2k)!
    double coef = beta;    // beta (beta-1) ... (beta-2k+2), falling
    double pN = std::pow(Nd, beta - 1.0), pM = std::pow(M, beta - 1.0);
    for (int k = 1; k <= 4; ++k) {
        bridge += b2k[k - 1] / fact * coef * (pN - pM);
        coef *= (beta - 2 * k + 1) * (beta - 2 * k);
        fact *= (2 * k + 1) * (2 * k + 2);
        pN /= (Nd * Nd);
        pM /= (M * M);
    }
    return head + bridge;
}

double partial_sum_power(double s, double x) {
    if (s <= 0.0) throw std::domain_error("partial_sum_power: s > 0");
    return sum_pow(-s, x);
}

double tail_integral_psi1(const ZetaContext& ctx, double s) {
    if (s <= 0.0) throw std::domain_error("tail_integral_psi1: s > 0");
    if (s == 1.0) return 0.5 * (0.5 - ctx.gamma());
    return 1.0 / (2.0 * s * (s - 1.0)) - ctx.zeta(s) / (s * (s + 1.0));
}

double psi1_weighted_partial(double y, double s) {
    if (y < 1.0) throw std::invalid_argument("psi1_weighted_partial: y >= 1");
    auto A0 = [&](double t) { return s == 1.0 ? std::log(t) : std::pow(t, 1.0 - s) / (1.0 - s); };
    auto A1 = [&](double t) { return -std::pow(t, -s) / s; };
    auto A2 = [&](double t) { return -std::pow(t, -s - 1.0) / (s + 1.0); };
    Kahan acc;
    std::uint64_t top = (std::uint64_t)std::floor(y);
    for (std::uint64_t n = 1; n <= top; ++n) {
        double lo = (double)n;
        double hi = std::min(y, (double)(n + 1));
        if (hi <= lo) break;
        // psi_1(t) = (t^2 - (2n+1) t + n(n+1)) / 2 on [n, n+1)
        double c1 = 2.0 * (double)n + 1.0;
        double c2 = (double)n * ((double)n + 1.0);
        acc.add(0.5 * ((A0(hi) - A0(lo)) - c1 * (A1(hi) - A1(lo)) +
                       c2 * (A2(hi) - A2(lo))));
    }
    return acc.value();
}

namespace {

// Exact pieces for the direct tail evaluation. Around the mean -1/12 of
// psi_1, successive continuous periodic antiderivatives
//   Qt = psi^3/6 - psi/24          (mean 0)
//   A  = psi^4/24 - psi^2/48       (mean -7/5760)
//   B  = psi^5/120 - psi^3/144 + (7/5760) psi   (vanishes at integers)
// drive integration by parts; after the B level the dropped remainder is
// below (s+2)(s+3) * 0.0018 * W^{-s-4}.
double tail_analytic(double W, double s) {
    double p = psi(W);
    double Qt = p * p * p / 6.0 - p / 24.0;
    double A = p * p * p * p / 24.0 - p * p / 48.0;
    const double muA = -7.0 / 5760.0;
    double B = p * p * p * p * p / 120.0 - p * p * p / 144.0 - muA * p;
    double w1 = std::pow(W, -s - 1.0);
    double w2 = w1 / W, w3 = w2 / W, w4 = w3 / W;
    return -w1 / (12.0 * (s + 1.0)) - Qt * w2 - (s + 2.0) * A * w3 +
           (s + 2.0) * muA * w3 - (s + 2.0) * (s + 3.0) * B * w4;
}

// int over [n+w0, n+w1] of psi_1(t) t^{-s-2} dt with psi_1 = (w^2-w)/2 in
// local coordinates; binomial series in w/n for n >= 2, plain antiderivatives
// on the first interval where nothing cancels
double psi1_interval_piece(std::uint64_t n, double s, double w0, double w1) {
    if (n >= 2) {
        double scale = std::pow((double)n, -s - 2.0);
        double binom = 1.0;  // C(-s-2, k)
        double inv_n = 1.0 / n;
        double p0 = w0 * w0, p1 = w1 * w1;  // w^{k+2}
        Kahan acc;
        for (int k = 0; k <= 100; ++k) {
            double bracket =
                0.5 * ((p1 * w1 - p0 * w0) / (k + 3) - (p1 - p0) / (k + 2));
            double term = binom * scale * bracket;
            acc.add(term);
            if (std::abs(term) < 1e-18 * (std::abs(acc.value()) + 1e-300) && k >= 4)
                break;
            binom *= (-s - 2.0 - k) / (k + 1);
            scale *= inv_n;
            p0 *= w0;
            p1 *= w1;
        }
        return acc.value();
    }
    double lo = (double)n + w0, hi = (double)n + w1;
    auto A0 = [&](double t) {
        return s == 1.0 ? std::log(t) : std::pow(t, 1.0 - s) / (1.0 - s);
    };
    double c1 = 2.0 * (double)n + 1.0;
    double c2 = (double)n * ((double)n + 1.0);
    return 0.5 * ((A0(hi) - A0(lo)) +
                  c1 * (std::pow(hi, -s) - std::pow(lo, -s)) / s -
                  c2 * (std::pow(hi, -s - 1.0) - std::pow(lo, -s - 1.0)) /
                      (s + 1.0));
}

}  // namespace

double tail_integral_psi1_from(const ZetaContext& ctx, double y, double s) {
    (void)ctx;
    if (y < 1.0) throw std::invalid_argument("tail_integral_psi1_from: y >= 1");
    // direct evaluation from y upward: stub of the first unit interval,
    // stable per-interval series across a window, analytic remainder. The
    // downstream R(a,b;x) assembly multiplies this by x^{1/a}, so the value
    // has to be accurate in absolute terms near 1e-17, which the closed-form
    // route via zeta would not survive.
    Kahan acc;
    std::uint64_t m0 = (std::uint64_t)std::ceil(y);
    std::uint64_t n0 = (std::uint64_t)std::floor(y);
    if ((double)m0 > y)
        acc.add(psi1_interval_piece(n0, s, y - (double)n0,
                                    std::min(1.0, (double)m0 - (double)n0)));
    std::uint64_t W1 = std::max<std::uint64_t>(m0, 3000);
    for (std::uint64_t n = m0; n < W1; ++n)
        acc.add(psi1_interval_piece(n, s, 0.0, 1.0));
    acc.add(tail_analytic((double)W1, s));
    return acc.value();
}

QuadratureSpec psi_product_spec(const DivisorPair& pair, std::uint64_t n,
                                double x, double abs_tol) {
    std::uint64_t lo = ipow(n, pair.sum());
    if ((double)lo > x)
        throw std::invalid_argument("psi_product_spec: requires n^{a+b} <= x");
    QuadratureSpec spec;
    spec.abs_tol = abs_tol;
    spec.breakpoints.reserve((std::size_t)(x - (double)lo) + 2);
    for (std::uint64_t m = lo; (double)m <= x; ++m)
        spec.breakpoints.push_back((double)m);
    return spec;
}

double quad_psi_product(const DivisorPair& pair, std::uint64_t n, double alpha,
                        double x, const QuadratureSpec& spec, bool swapped) {
    int p = swapped ? pair.b() : pair.a();
    int q = swapped ? pair.a() : pair.b();
    std::uint64_t lo = ipow(n, p + q);
    if ((double)lo > x)
        throw std::invalid_argument("quad_psi_product: requires n^{a+b} <= x");
    if ((double)lo == x) return 0.0;
    double nq = (double)ipow(n, q);
    auto f = [&](double t) {
        return std::pow(t, alpha) * psi(t) * psi(std::pow(t / nq, 1.0 / p));
    };
    return integrate(f, (double)lo, x, spec);
}

double i_integral_closed(const DivisorPair& pair, std::uint64_t n, double alpha,
                         double x, bool swapped) {
    int p = swapped ? pair.b() : pair.a();
    int q = swapped ? pair.a() : pair.b();
    std::uint64_t lo = ipow(n, p + q);
    if ((double)lo > x)
        throw std::invalid_argument("i_integral_closed: requires n^{a+b} <= x");
    std::uint64_t X = (std::uint64_t)std::floor(x);
    std::uint64_t nq = ipow(n, q);
    std::uint64_t J = floor_kth_root(X / nq, p);  // [(x/n^q)^{1/p}] exactly

    double wa_hi = w_alpha_exact(alpha + 1.0 / p, x).value;
    double wa_lo = w_alpha_exact(alpha + 1.0 / p, (double)lo).value;
    auto prefix = (alpha == -1.0 || alpha == -2.0)
                      ? std::vector<double>{}
                      : w_general_prefix(alpha, X);
    auto w_at_int = [&](std::uint64_t m) {
        return prefix.empty() ? w_alpha_exact(alpha, (double)m).value
                              : prefix[m];
    };
    Kahan sum_w;
    for (std::uint64_t j = n; j <= J; ++j) sum_w.add(w_at_int(ipow(j, p) * nq));
    double w_at_lo = w_at_int(lo);
    double f = x - (double)X;
    double w_at_x = prefix.empty()
                        ? w_alpha_exact(alpha, x).value
                        : prefix[X] + (f > 0.0 ? interval((double)X, alpha, f) : 0.0);

    // (x/n^q)^{1/p} - psi((x/n^q)^{1/p}) = J + 1/2, used exactly
    return std::pow((double)n, -(double)q / p) * (wa_hi - wa_lo) + sum_w.value() +
           ((double)n - 0.5) * w_at_lo - ((double)J + 0.5) * w_at_x;
}

double i_integral_asymptotic(const DivisorPair& pair, std::uint64_t n,
                             double alpha, double x, bool swapped) {
    if (alpha == -1.0 || alpha == -2.0)
        throw std::domain_error("i_integral_asymptotic: alpha in {-1,-2} excluded");
    int p = swapped ? pair.b() : pair.a();
    int q = swapped ? pair.a() : pair.b();
    std::uint64_t lo = ipow(n, p + q);
    if ((double)lo > x)
        throw std::invalid_argument("i_integral_asymptotic: requires n^{a+b} <= x");
    std::uint64_t X = (std::uint64_t)std::floor(x);
    std::uint64_t nq = ipow(n, q);
    std::uint64_t J = floor_kth_root(X / nq, p);
    double u = std::pow(x / (double)nq, 1.0 / p);
    double psi_u = psi_floored(u, (double)J);
    double nd = (double)n;
    if (std::abs(alpha + 1.0 / p) < 1e-12) {
        return (1.0 / (12.0 * p)) * std::pow(nd, -(double)q / p) *
                   (std::log(x) - (p + q) * std::log(nd)) +
               psi_u * psi1(x) * std::pow(x, -1.0 / p);
    }
    return (1.0 / (12.0 * (1.0 + p * alpha))) *
               (std::pow(x, alpha + 1.0 / p) / std::pow(nd, (double)q / p) -
                std::pow(nd, (p + q) * alpha + 1.0)) +
           psi_u * psi1(x) * std::pow(x, alpha);
}

}  // namespace div2d
