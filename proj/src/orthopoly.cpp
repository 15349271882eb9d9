#include "biortho/orthopoly.hpp"

#include "biortho/simd.hpp"
#include "biortho/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace biortho {

double Poly::operator()(double t) const {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r{std::vector<double>(std::max(c.size(), o.c.size()), 0.0)};
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * -1.0; }

Poly Poly::operator*(double s) const {
    Poly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

JacobiFamily::JacobiFamily(double a_, double b_) : a(a_), b(b_) {
    if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("JacobiFamily: parameters must exceed -1");
}

double JacobiFamily::hypergeometric(int n, double y) const {
    const double x = 0.5 * (1.0 - y);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (k - n) * (n + a + b + 1.0 + k) / ((a + 1.0 + k) * (k + 1.0)) * x;
        sum += term;
    }
    double pref = 1.0;
    for (int k = 1; k <= n; ++k) pref *= (a + k) / k;
    return pref * sum;
}

double JacobiFamily::recurrence(int n, double y) const {
    double out;
    simd::scalar::jacobi_batch(n, a, b, &y, &out, 1);
    return out;
}

double JacobiFamily::operator()(int n, double y) const {
    if (n < 0) throw std::domain_error("jacobi: degree must be >= 0");
    return n <= jacobi_sum_max_degree ? hypergeometric(n, y) : recurrence(n, y);
}

namespace {

// (-1)^k (g+1)_m / (a+1)_m with m = k for even degree 2k, m = k+1 for odd degree 2k+1.
double gengeg_prefactor(double g, double a, int k, bool odd) {
    double r = (k % 2 == 0) ? 1.0 : -1.0;
    const int m = odd ? k + 1 : k;
    for (int j = 0; j < m; ++j) r *= (g + 1.0 + j) / (a + 1.0 + j);
    return r;
}

} // namespace

double GenGegenbauerFamily::operator()(int n, double t) const {
    double out;
    batch(n, &t, &out, 1);
    return out;
}

void GenGegenbauerFamily::batch(int n, const double* t, double* out, std::size_t m) const {
    if (n < 0) throw std::domain_error("gengeg: degree must be >= 0");
    const double al = params.alpha, be = params.beta, g = params.sum();
    const int k = n / 2;
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = 1.0 - 2.0 * t[i] * t[i];
    if (n % 2 == 0) {
        const double c = gengeg_prefactor(g, al, k, false);
        if (k <= jacobi_sum_max_degree) {
            JacobiFamily jf(al, be);
            for (std::size_t i = 0; i < m; ++i) out[i] = c * jf.hypergeometric(k, y[i]);
        } else {
            simd::jacobi_batch(k, al, be, y.data(), out, m);
            for (std::size_t i = 0; i < m; ++i) out[i] *= c;
        }
    } else {
        const double c = gengeg_prefactor(g, al, k, true);
        if (k <= jacobi_sum_max_degree) {
            JacobiFamily jf(al + 1.0, be);
            for (std::size_t i = 0; i < m; ++i) out[i] = c * t[i] * jf.hypergeometric(k, y[i]);
        } else {
            simd::jacobi_batch(k, al + 1.0, be, y.data(), out, m);
            for (std::size_t i = 0; i < m; ++i) out[i] *= c * t[i];
        }
    }
}

double GenGegenbauerFamily::norm(int n) const {
    if (n < 0) throw std::domain_error("gengeg_norm: degree must be >= 0");
    const double al = params.alpha, be = params.beta, g = params.sum();
    const int m = n / 2;
    const double common = lgamma_pos(al + 1.0) + lgamma_pos(be + m + 1.0) - (al + 1.0) * std::log(2.0) -
                          2.0 * lgamma_pos(g + 1.0) - lgamma_pos(m + 1.0);
    if (n % 2 == 0)
        return std::exp(common + lgamma_pos(g + m + 1.0) - lgamma_pos(al + m + 1.0)) / (g + 2.0 * m + 1.0);
    return std::exp(common + lgamma_pos(g + m + 2.0) - lgamma_pos(al + m + 2.0)) / (g + 2.0 * m + 2.0);
}

Poly GenGegenbauerFamily::poly(int n) const {
    const double al = params.alpha, g = params.sum();
    const int m = n / 2;
    Poly p{std::vector<double>(static_cast<std::size_t>(n + 1), 0.0)};
    // Expand (a+1)_m/m! 2F1(-m, m+a+b+1; a+1; t^2) with a = alpha (+1 for odd n).
    const bool odd = n % 2 == 1;
    const double a = odd ? al + 1.0 : al;
    const double top = odd ? g + 2.0 : g + 1.0;
    double c = gengeg_prefactor(g, al, m, odd);
    for (int k = 1; k <= m; ++k) c *= (a + k) / k;
    double term = c;
    for (int k = 0; k <= m; ++k) {
        p.c[static_cast<std::size_t>(2 * k + (odd ? 1 : 0))] = term;
        term *= (k - m) * (m + top + k) / ((a + 1.0 + k) * (k + 1.0));
    }
    return p;
}

Poly dunkl_apply_poly(double alpha, const Poly& p) {
    if (p.c.size() <= 1) return Poly{{0.0}};
    Poly r{std::vector<double>(p.c.size() - 1, 0.0)};
    for (std::size_t m = 1; m < p.c.size(); ++m) {
        const double f = static_cast<double>(m) + ((m % 2 == 1) ? 2.0 * alpha + 1.0 : 0.0);
        r.c[m - 1] = f * p.c[m];
    }
    return r;
}

ConnectionCoeffs gengeg_connection(const Params& p, int n) {
    if (n < 1) throw std::domain_error("gengeg_connection: n must be >= 1");
    const double al = p.alpha, be = p.beta, g = p.sum();
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        const double d = g + 2.0 * k + 2.0;
        return {(be + k + 1.0) * (g + k + 1.0) / d, (k + 1.0) * (al + k + 1.0) / d};
    }
    const int k = n / 2;
    const double d = g + 2.0 * k + 1.0;
    return {(be + k) * (g + k + 1.0) / d, k * (al + k + 1.0) / d};
}

double gengeg_lowering(const Params& p, int n) { return (p.sum() + 1.0) / (p.sum() + n + 1.0); }

double gegenbauer(double lambda, int n, double t) {
    if (lambda == 0.0) throw std::domain_error("gegenbauer: lambda = 0 uses chebyshev_t");
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = 2.0 * lambda * t;
    for (int k = 2; k <= n; ++k) {
        const double p2 = (2.0 * t * (k + lambda - 1.0) * p1 - (k + 2.0 * lambda - 2.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double chebyshev_t(int n, double t) {
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
        const double p2 = 2.0 * t * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace biortho
