#pragma once

#include <cstdint>

#include "div2d/pair.hpp"
#include "div2d/quadrature.hpp"
#include "div2d/zeta.hpp"

namespace div2d {

enum class Parity { Odd, Even };

// Closed forms of int_1^x psi^m(t) dt:
//   m = 2k-1:  (psi^{2k}(x) - 2^{-2k}) / (2k)
//   m = 2k:    ((x-1)/2^{2k} - psi(x)/2^{2k} + psi^{2k+1}(x)) / (2k+1)
double psi_power_integral(int k, Parity parity, double x);

struct WAlphaResult {
    enum class Branch { General, AlphaMinus1, AlphaMinus2 };
    double alpha;
    double x;
    double value;
    Branch branch;
};

// W_alpha(x) = int_1^x t^alpha psi(t) dt, exact in all three branches.
// The general branch sums per-unit-interval integrals in a cancellation-free
// binomial form (cost O(x)); alpha = -2 uses the log/harmonic identity and
// alpha = -1 the log-Gamma telescoped antiderivatives.
WAlphaResult w_alpha_exact(double alpha, double x);

// Lemma-2.5 approximation:
//   (zeta(-1-alpha) - alpha/(2(2+alpha)))/(alpha+1) + (psi_1(x) + 1/12) x^alpha
// Cross-check target only; the error decays like x^{alpha-1}.
double w_alpha_asymptotic(const ZetaContext& ctx, double alpha, double x);

// sum_{n<=x} n^beta for any real beta: direct compensated summation up to
// 10^6 terms, Euler-Maclaurin bridge between integer anchors beyond.
double sum_pow(double beta, double x);

// sum_{n<=x} n^{-s}, s > 0
double partial_sum_power(double s, double x);

// int_1^inf psi_1(t) t^{-s-2} dt:
//   s != 1:  1/(2s(s-1)) - zeta(s)/(s(s+1))
//   s  = 1:  (1/2)(1/2 - gamma)
double tail_integral_psi1(const ZetaContext& ctx, double s);

// exact int_1^y psi_1(t) t^{-s-2} dt (psi_1 is the quadratic
// (t-n)(t-n-1)/2 on each unit interval; antiderivatives summed per interval)
double psi1_weighted_partial(double y, double s);

// int_y^inf psi_1(t) t^{-s-2} dt
double tail_integral_psi1_from(const ZetaContext& ctx, double y, double s);

// Breakpoints for t^alpha psi(t) psi((t/n^q)^{1/p}) on [n^{p+q}, x]: both
// factors kink only at integer t (the inner one at t = j^p n^q, an integer),
// so the list is every integer of the range.
QuadratureSpec psi_product_spec(const DivisorPair& pair, std::uint64_t n,
                                double x, double abs_tol = 1e-11);

// quadrature value of I^{(alpha)}_{(a,b)}(n,x) (oracle); swapped exchanges
// the roles of a and b, i.e. I_{(b,a)}
double quad_psi_product(const DivisorPair& pair, std::uint64_t n, double alpha,
                        double x, const QuadratureSpec& spec,
                        bool swapped = false);

// exact I^{(alpha)}_{(a,b)}(n,x) assembled from W_alpha values:
//   n^{-b/a} (W_{alpha+1/a}(x) - W_{alpha+1/a}(n^{a+b}))
//   + sum_{j=n}^{J} W_alpha(j^a n^b) + (n - 1/2) W_alpha(n^{a+b})
//   - (J + 1/2) W_alpha(x),         J = [(x/n^b)^{1/a}]
double i_integral_closed(const DivisorPair& pair, std::uint64_t n, double alpha,
                         double x, bool swapped = false);

// main terms of the I-integral asymptotics; the alpha = -1/a branch carries
// the log form
double i_integral_asymptotic(const DivisorPair& pair, std::uint64_t n,
                             double alpha, double x, bool swapped = false);

}  // namespace div2d
