#pragma once

#include <map>
#include <mutex>
#include <vector>

namespace div2d {

// Cached zeta values, the Euler constant and a Bernoulli table.
//
// Positive real s != 1 is evaluated by the Euler-Maclaurin formula with
// Bernoulli corrections (truncation point max(20, ceil(10|s|)), 8 correction
// terms) and self-verified against a doubled truncation point to 1e-13
// relative. Negative integers come from the Bernoulli table via
// zeta(-n) = -B_{n+1}/(n+1) (B_1 = +1/2 convention), negative non-integers
// through the functional equation. Logically immutable; the value cache is
// internal and lock-protected, so a single instance is safely shareable.
class ZetaContext {
public:
    ZetaContext();

    // s > 0, s != 1. Throws std::domain_error at the pole and for s <= 0.
    double zeta(double s) const;

    // any real s != 1 (functional equation for s < 0)
    double zeta_any(double s) const;

    // zeta(-n) for integer n >= 0; exact rational values, zeta(-2k) = 0
    double zeta_neg_int(int n) const;

    double gamma() const { return gamma_; }

    // B_k for k <= 32 (B_1 = +1/2; odd k > 1 give 0)
    double bernoulli(int k) const;

    // 2 * int_1^inf psi_2(t) t^-3 dt = log(2 pi)/2 - 1, the limit value of
    // W_{-1}; closed form via Stirling, cross-checked by quadrature in tests
    double w_minus1_limit() const { return wm1_; }

    // raw Euler-Maclaurin evaluation at a chosen truncation point (exposed
    // so tests can run the doubled-truncation oracle independently)
    double euler_maclaurin_zeta(double s, int trunc) const;

private:
    double compute(double s) const;

    double gamma_;
    double wm1_;
    std::vector<double> bern_;
    mutable std::map<double, double> cache_;
    mutable std::mutex mu_;
};

}  // namespace div2d
