#pragma once

#include <cstdint>
#include <functional>

#include "div2d/pair.hpp"
#include "div2d/table.hpp"
#include "div2d/zeta.hpp"

namespace div2d {

// Truncation order of the oscillating d*-series together with a certified
// bound on the dropped weight sum_{n>N} d*(a,b;n) n^{-1-1/(2(a+b))}. The
// full weighted series factorizes exactly as zeta(1+a d) zeta(1+b d) with
// d = 1/(2(a+b)) (substitute n = m^a r^b), so the bound is the exact
// difference of that total and the computed partial sum.
struct SeriesTruncation {
    std::uint64_t n_terms;
    double tail_bound;
};

SeriesTruncation make_truncation(const ZetaContext& ctx, const DivisorPair& p,
                                 std::uint64_t n_terms);

struct MomentReport {
    double x;
    double discrete_sum;
    double continuous_integral;
    double rhs_main;
    double residual;
    double normalized_residual;
};

// leading coefficient c_0 = (a^a b^b)^{1+1/(2(a+b))} / (2 pi^2 sqrt(ab(a+b)))
double g_series_c0(const DivisorPair& p);
inline constexpr double kTheta0 = -2.35619449019234492884698253745962716;  // -3 pi / 4

// G_{(a,b)}(x) = c_0 x^{1-1/(2(a+b))} sum_{n<=N} d*(n) n^{-1-1/(2(a+b))}
//                 cos(2(a+b) pi (a^-a b^-b n x)^{1/(a+b)} + theta_0)
// absolute truncation error <= c_0 x^{1-1/(2(a+b))} * trunc.tail_bound
double g_series(const ZetaContext& ctx, const DivisorPair& p, double x,
                const SeriesTruncation& trunc);

// integrated Voronoi main terms: x/4 + zeta(-a) zeta(-b) + G_{(a,b)}(x)
double voronoi_integral(const ZetaContext& ctx, const DivisorPair& p, double x,
                        const SeriesTruncation& trunc);

// exact int_0^x Delta(a,b;t) dt (D is a step function, the main term has
// closed antiderivatives)
double delta_integral(const ZetaContext& ctx, const DivisorPair& p,
                      const DivisorTable& table, double x);

// exact int_1^T Delta^2(a,b;t) dt, summed per unit interval in local
// coordinates (no D^2-sized cancellations)
double continuous_mean_square(const ZetaContext& ctx, const DivisorPair& p,
                              const DivisorTable& table, double T,
                              unsigned threads = 1);

// sum_{n <= x} Delta^k(a,b;n), sieve-backed, deterministic under threading
double discrete_moment(const ZetaContext& ctx, const DivisorPair& p,
                       const DivisorTable& table, double x, int k,
                       unsigned threads = 1);

// c_{a,b} = a^{b/(a+b)} b^{a/(a+b)} / (2(a+b+1) pi^2) * sum g^2(n), as a
// truncated series; *tail_bound receives the certified bound on the dropped
// part of the constant
double c_ab_constant(const ZetaContext& ctx, const DivisorPair& p,
                     const SeriesTruncation& trunc,
                     double* tail_bound = nullptr);

// exact value of sum_{n>=1} g^2_{a,b}(n): classifying coincidences
// h1^a r1^b = h2^a r2^b (coprime exponents) factorizes the square sum into
//   zeta(2A) zeta(2B) zeta(c)^2 / zeta(2c),
// A = (a+2b)/(2(a+b)), B = (b+2a)/(2(a+b)), c = (a^2+ab+b^2)/(a+b).
// At (1,1) this is the classical zeta(3/2)^4 / zeta(3).
double g_square_series_total(const ZetaContext& ctx, const DivisorPair& p);

// the (1,1) mean-square constant zeta(3/2)^4 / (6 pi^2 zeta(3))
double c11_constant(const ZetaContext& ctx);

// Residual of the summation-by-parts identity for E(x) = sum_{n<=x} f(n) - g(x):
//   sum_{n<=x} E^k(n) - [(1/2 - psi(x)) E^k(x) + int_1^x E^k
//                        + k int_1^x (1/2 - psi(u)) g'(u) E^{k-1}(u) du]
// with breakpoint-aware quadrature for the integrals. Exact inputs must give
// a residual at quadrature tolerance.
double furuya_residual(const std::function<double(std::uint64_t)>& f,
                       const std::function<double(double)>& g,
                       const std::function<double(double)>& g_prime, int k,
                       double x, double quad_tol = 1e-11);

// explicit right-hand sides (no O-remainders)
double theorem1_rhs(const ZetaContext& ctx, const DivisorPair& p,
                    const DivisorTable& table, double x,
                    const SeriesTruncation& trunc, unsigned threads = 1);
double theorem2_rhs(const ZetaContext& ctx, const DivisorTable& table, double x,
                    const SeriesTruncation& trunc, unsigned threads = 1);
double corollary1_rhs(const ZetaContext& ctx, const DivisorPair& p,
                      const DivisorTable& table, double x,
                      unsigned threads = 1);
double first_moment_rhs(const ZetaContext& ctx, const DivisorPair& p,
                        const DivisorTable& table, double x);

// sum_{n<=x} Delta(n) minus the explicit first-moment right side; O(1) for
// a < b, O(log x) on the diagonal
double first_moment_residual(const ZetaContext& ctx, const DivisorPair& p,
                             const DivisorTable& table, double x,
                             unsigned threads = 1);

}  // namespace div2d
