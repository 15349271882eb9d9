#include "biortho/simd.hpp"

#include <immintrin.h>

namespace biortho::simd::avx2 {

double dot(const double* a, const double* b, std::size_t n) {
    __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
    __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
        s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), s1);
        s2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), s2);
        s3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), s3);
    }
    for (; i + 4 <= n; i += 4) s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
    const __m256d s = _mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, s);
    double r = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m) {
    std::size_t i = 0;
    if (n > 0) {
        const __m256d one = _mm256_set1_pd(1.0);
        const __m256d c0 = _mm256_set1_pd(a + 1.0);
        const __m256d half = _mm256_set1_pd(0.5 * (a + b + 2.0));
        for (; i + 4 <= m; i += 4) {
            const __m256d yv = _mm256_loadu_pd(y + i);
            __m256d p0 = one;
            __m256d p1 = _mm256_fmadd_pd(half, _mm256_sub_pd(yv, one), c0);
            for (int k = 2; k <= n; ++k) {
                const double c = 2.0 * k + a + b;
                const double inv_a1 = 1.0 / (2.0 * k * (k + a + b) * (c - 2.0));
                const __m256d a2 = _mm256_set1_pd((c - 1.0) * (a * a - b * b) * inv_a1);
                const __m256d a3 = _mm256_set1_pd((c - 2.0) * (c - 1.0) * c * inv_a1);
                const __m256d a4 = _mm256_set1_pd(2.0 * (k + a - 1.0) * (k + b - 1.0) * c * inv_a1);
                const __m256d p2 = _mm256_fnmadd_pd(a4, p0, _mm256_mul_pd(_mm256_fmadd_pd(a3, yv, a2), p1));
                p0 = p1;
                p1 = p2;
            }
            _mm256_storeu_pd(out + i, p1);
        }
    }
    scalar::jacobi_batch(n, a, b, y + i, out + i, m - i);
}

} // namespace biortho::simd::avx2
