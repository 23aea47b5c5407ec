#pragma once

#include <cstdint>
#include <optional>

#include "div2d/pair.hpp"
#include "div2d/zeta.hpp"

namespace div2d {

// Thrown when a dual-path identity check disagrees beyond tolerance; the
// closed forms here are exact identities, so disagreement is a hard failure,
// never something to absorb.
struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeltaEval {
    double x;
    std::uint64_t count;  // D(a,b;x), exact
    double main;          // zeta(b/a) x^{1/a} + zeta(a/b) x^{1/b}, or the log form at (1,1)
    double delta;         // count - main
    DivisorPair pair;
};

struct RemainderEval {
    double x;
    double r_value;                 // R(a,b;x) from the psi_1 + tail-integral identity
    std::optional<double> r_prime;  // derivative main terms; absent when x^{1/(a+b)} is an integer
    double tail_a;                  // int_{x^{1/(a+b)}}^inf psi_1(t) t^{-2-b/a} dt
    double tail_b;                  // same with a/b
};

// exact lattice count D(a,b;x) = #{m^a r^b <= x} by the hyperbola split at
// x^{1/(a+b)}; every floor-of-root goes through integer Newton correction
std::uint64_t count_exact(const DivisorPair& p, double x);

double main_term(const ZetaContext& ctx, const DivisorPair& p, double x);

DeltaEval delta_eval(const ZetaContext& ctx, const DivisorPair& p, double x);

// sum over n^{a+b} <= x of psi((x/n^b)^{1/a}) + psi((x/n^a)^{1/b}), the
// oscillating sum of the sharp Delta representation
double psi_sum(const DivisorPair& p, double x);

// R(a,b;x) from its definition: Delta + psi_sum
double remainder_from_definition(const ZetaContext& ctx, const DivisorPair& p,
                                 double x);

// R(a,b;x) from the closed identity
//   -((a+b)^2/(ab)) psi_1(y) + (b(a+b)/a^2) x^{1/a} T_{b/a} + (a(a+b)/b^2) x^{1/b} T_{a/b}
// with y = x^{1/(a+b)} and T_s = int_y^inf psi_1 t^{-s-2} dt evaluated
// exactly. check_tol > 0 recomputes R from the definition and throws
// IdentityViolation on disagreement (pass 0 to skip the cross-check).
RemainderEval remainder_exact(const ZetaContext& ctx, const DivisorPair& p,
                              double x, double check_tol = 1e-8);

// main terms of R'(a,b;x); x^{1/(a+b)} must not be an integer
double remainder_derivative(const ZetaContext& ctx, const DivisorPair& p,
                            double x);

}  // namespace div2d
