#include "div2d/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "div2d/ksum.hpp"

namespace div2d {

namespace {
constexpr double kGamma = 0.577215664901532860606512090082402431;
constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace

ZetaContext::ZetaContext() : gamma_(kGamma) {
    // B_0 .. B_32, B_1 = +1/2 convention
    bern_.assign(33, 0.0);
    bern_[0] = 1.0;
    bern_[1] = 0.5;
    bern_[2] = 1.0 / 6.0;
    bern_[4] = -1.0 / 30.0;
    bern_[6] = 1.0 / 42.0;
    bern_[8] = -1.0 / 30.0;
    bern_[10] = 5.0 / 66.0;
    bern_[12] = -691.0 / 2730.0;
    bern_[14] = 7.0 / 6.0;
    bern_[16] = -3617.0 / 510.0;
    bern_[18] = 43867.0 / 798.0;
    bern_[20] = -174611.0 / 330.0;
    bern_[22] = 854513.0 / 138.0;
    bern_[24] = -236364091.0 / 2730.0;
    bern_[26] = 8553103.0 / 6.0;
    bern_[28] = -23749461029.0 / 870.0;
    bern_[30] = 8615841276005.0 / 14322.0;
    bern_[32] = -7709321041217.0 / 510.0;

    wm1_ = 0.5 * std::log(2.0 * kPi) - 1.0;
}

double ZetaContext::bernoulli(int k) const {
    if (k < 0 || k >= (int)bern_.size())
        throw std::out_of_range("ZetaContext::bernoulli: table holds B_0..B_32");
    return bern_[k];
}

double ZetaContext::zeta_neg_int(int n) const {
    if (n < 0) throw std::domain_error("zeta_neg_int: n must be >= 0");
    if (n >= 2 && n % 2 == 0) return 0.0;  // trivial zeros
    return -bernoulli(n + 1) / (n + 1);
}

// zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
double ZetaContext::euler_maclaurin_zeta(double s, int trunc) const {
    Kahan head;
    for (int n = 1; n < trunc; ++n) head.add(std::pow((double)n, -s));
    double v = head.value() + std::pow((double)trunc, 1.0 - s) / (s - 1.0) +
               0.5 * std::pow((double)trunc, -s);
    double rising = s;                // s(s+1)...(s+2k-2)
    double fact = 2.0;                // (2k)!
    double npow = std::pow((double)trunc, -s - 1.0);
    double n2 = 1.0 / ((double)trunc * (double)trunc);
    Kahan corr;
    for (int k = 1; k <= 8; ++k) {
        corr.add(bernoulli(2 * k) / fact * rising * npow);
        // advance to k+1
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        fact *= (2 * k + 1) * (2 * k + 2);
        npow *= n2;
    }
    return v + corr.value();
}

double ZetaContext::compute(double s) const {
    if (s == 1.0) throw std::domain_error("zeta: pole at s = 1");
    if (s > 0.0) {
        int trunc = std::max(20, (int)std::ceil(10.0 * std::abs(s)));
        double v1 = euler_maclaurin_zeta(s, trunc);
        double v2 = euler_maclaurin_zeta(s, 2 * trunc);
        if (std::abs(v1 - v2) > 1e-13 * std::max(1.0, std::abs(v2)))
            throw std::runtime_error("zeta: doubled-truncation self-check failed");
        return v2;
    }
    // s < 0
    double r = std::round(s);
    if (r == s && std::abs(r) < 1e15) return zeta_neg_int((int)-r);
    // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    double z1ms = compute(1.0 - s);
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           std::tgamma(1.0 - s) * z1ms;
}

double ZetaContext::zeta(double s) const {
    if (s <= 0.0) throw std::domain_error("zeta: requires s > 0 (negative arguments use zeta_neg_int / zeta_any)");
    return zeta_any(s);
}

double ZetaContext::zeta_any(double s) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
    }
    double v = compute(s);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(s, v);
    return v;
}

}  // namespace div2d
