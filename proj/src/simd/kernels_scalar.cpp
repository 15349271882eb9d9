#include "biortho/simd.hpp"

namespace biortho::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        if (n == 0) {
            out[i] = 1.0;
            continue;
        }
        double p0 = 1.0;
        double p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (y[i] - 1.0);
        for (int k = 2; k <= n; ++k) {
            const double c = 2.0 * k + a + b;
            const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
            const double a2 = (c - 1.0) * (a * a - b * b);
            const double a3 = (c - 2.0) * (c - 1.0) * c;
            const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
            const double p2 = ((a2 + a3 * y[i]) * p1 - a4 * p0) / a1;
            p0 = p1;
            p1 = p2;
        }
        out[i] = p1;
    }
}

} // namespace biortho::simd::scalar
