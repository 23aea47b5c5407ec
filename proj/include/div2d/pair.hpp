#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace div2d {

// Exponent pair (a,b) of the two-dimensional divisor problem: we count
// representations n = h^a r^b with 1 <= a <= b and gcd(a,b) = 1.
// The diagonal pair (1,1) is the classical Dirichlet divisor problem and
// selects the x log x + (2*gamma - 1) x main term; every other admissible
// pair has a < b and the zeta(b/a) x^{1/a} + zeta(a/b) x^{1/b} main term.
class DivisorPair {
public:
    DivisorPair(int a, int b) : a_(a), b_(b) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("DivisorPair: exponents must be positive");
        if (a > b)
            throw std::invalid_argument("DivisorPair: requires a <= b");
        if (std::gcd(a, b) != 1)
            throw std::invalid_argument("DivisorPair: requires gcd(a,b) = 1");
    }

    int a() const { return a_; }
    int b() const { return b_; }
    int sum() const { return a_ + b_; }
    bool diagonal() const { return a_ == b_; }  // only (1,1) survives the invariants

    std::string str() const {
        return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    }

    bool operator==(const DivisorPair& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
    int a_, b_;
};

}  // namespace div2d
