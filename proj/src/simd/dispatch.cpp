#include "biortho/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace biortho::simd {

namespace {

Isa detect() {
    if (const char* env = std::getenv("BIORTHO_SIMD"); env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

bool avx2_available() {
#if defined(BIORTHO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
    current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) {
#ifdef BIORTHO_HAVE_AVX2
    if (active_isa() == Isa::avx2) return avx2::dot(a, b, n);
#endif
    return scalar::dot(a, b, n);
}

void jacobi_batch(int n, double a, double b, const double* y, double* out, std::size_t m) {
#ifdef BIORTHO_HAVE_AVX2
    if (active_isa() == Isa::avx2) return avx2::jacobi_batch(n, a, b, y, out, m);
#endif
    scalar::jacobi_batch(n, a, b, y, out, m);
}

} // namespace biortho::simd
