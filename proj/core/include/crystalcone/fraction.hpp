#pragma once

#include <numeric>
#include <stdexcept>

namespace crystalcone {

using Int = long long;

/// Exact rational number with a positive denominator.
struct Fraction {
    Int num = 0;
    Int den = 1;

    Fraction() = default;
    Fraction(Int n, Int d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool positive() const { return num > 0; }

    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

} // namespace crystalcone
