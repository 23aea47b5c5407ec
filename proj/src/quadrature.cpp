#include "div2d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "div2d/gl15.hpp"
#include "div2d/ksum.hpp"

namespace div2d {

namespace {

double adapt(const std::function<double(double)>& f, double lo, double hi,
             double whole, double tol_per_len, int depth) {
    double mid = 0.5 * (lo + hi);
    double left = gauss15(f, lo, mid);
    double right = gauss15(f, mid, hi);
    double refined = left + right;
    // the relative floor keeps the recursion from chasing rounding noise of
    // large integrands below the requested absolute tolerance; the node sums
    // themselves carry a few tens of ulp
    double limit = tol_per_len * (hi - lo) +
                   1e-14 * (std::abs(left) + std::abs(right));
    if (depth <= 0 || std::abs(refined - whole) <= limit) return refined;
    return adapt(f, lo, mid, left, tol_per_len, depth - 1) +
           adapt(f, mid, hi, right, tol_per_len, depth - 1);
}

}  // namespace

double gauss15(const std::function<double(double)>& f, double lo, double hi) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < gl15::kN; ++i)
        s += gl15::kWeight[i] * f(c + h * gl15::kNode[i]);
    return s * h;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
    if (spec.abs_tol <= 0.0)
        throw std::invalid_argument("integrate: abs_tol must be positive");
    if (hi <= lo) return 0.0;
    // panel boundaries: lo, interior breakpoints, hi
    std::vector<double> cuts;
    cuts.push_back(lo);
    for (double b : spec.breakpoints)
        if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    Kahan total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        if (b <= a) continue;
        total.add(adapt(f, a, b, gauss15(f, a, b), spec.abs_tol, spec.max_depth));
    }
    return total.value();
}

}  // namespace div2d
