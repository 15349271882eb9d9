#pragma once

#include <cstddef>

namespace biortho::simd {

enum class Isa { scalar, avx2 };

// Chosen once: AVX2+FMA when built in and reported by the CPU, unless the
// environment variable BIORTHO_SIMD=scalar is set.
Isa active_isa();
void force_isa(Isa isa);
bool avx2_available();
const char* isa_name(Isa isa);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);
// out[i] = P_n^{(a,b)}(y[i]) by the three-term recurrence.
void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m);
} // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m);
} // namespace avx2

} // namespace biortho::simd
