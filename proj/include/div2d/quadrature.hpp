#pragma once

#include <functional>
#include <vector>

namespace div2d {

// Controls for the breakpoint-aware adaptive quadrature used by every
// identity oracle. Integrands here are smooth between kinks of the sawtooth
// factors; only kink placement matters, so every discontinuity or kink of
// the integrand must be listed as a breakpoint. abs_tol is per unit length.
struct QuadratureSpec {
    double abs_tol = 1e-11;
    int max_depth = 18;
    std::vector<double> breakpoints;  // strictly increasing
};

// Adaptive 15-point Gauss-Legendre between consecutive breakpoints,
// recursive bisection until the two-half refinement of a panel moves the
// value by at most abs_tol * panel_length.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec);

// single fixed 15-point Gauss-Legendre panel (building block, also used by
// the mean-square sweep in local coordinates)
double gauss15(const std::function<double(double)>& f, double lo, double hi);

}  // namespace div2d
