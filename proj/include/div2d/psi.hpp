#pragma once

#include <cmath>

namespace div2d {

// The centered sawtooth psi(u) = u - [u] - 1/2 and its first two
// antiderivatives taken from 1:
//
//   psi_1(x) = (psi^2(x) - 1/4) / 2                      (1-periodic, 0 at integers)
//   psi_2(x) = -x/12 + psi^3(x)/6 - psi(x)/24 + 1/12     (psi_2(1) = 0)
struct PsiState {
    double u;
    double psi;   // in [-1/2, 1/2)
    double psi1;  // in [-1/8, 0]
    double psi2;
};

inline double psi(double u) { return u - std::floor(u) - 0.5; }

// psi(u) with the integer part supplied by the caller. Used where floor(u)
// was established in exact integer arithmetic and the floating-point floor
// of a computed root could land on the wrong side of an integer.
inline double psi_floored(double u, double floor_u) { return u - floor_u - 0.5; }

inline double psi1_of_psi(double p) { return 0.5 * (p * p - 0.25); }
inline double psi1(double u) { return psi1_of_psi(psi(u)); }

inline double psi2_of(double u, double p) {
    return -u / 12.0 + p * p * p / 6.0 - p / 24.0 + 1.0 / 12.0;
}
inline double psi2(double u) { return psi2_of(u, psi(u)); }

inline PsiState psi_eval(double u) {
    PsiState s;
    s.u = u;
    s.psi = psi(u);
    s.psi1 = psi1_of_psi(s.psi);
    s.psi2 = psi2_of(u, s.psi);
    return s;
}

}  // namespace div2d
