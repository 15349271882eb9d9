#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace biortho {

using Cx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr Cx I{0.0, 1.0};

// (alpha, beta) with alpha, beta > -1 and alpha + beta > -1.
struct Params {
    double alpha;
    double beta;

    Params(double a, double b) : alpha(a), beta(b) {
        if (!(a > -1.0) || !(b > -1.0) || !(a + b > -1.0))
            throw std::domain_error("Params: need alpha > -1, beta > -1, alpha + beta > -1 (got " +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }

    double sum() const { return alpha + beta; }
    Params raised() const { return {alpha, beta + 1.0}; }
};

// i^n for integer n (negative allowed).
inline Cx ipow(int n) {
    switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

} // namespace biortho
