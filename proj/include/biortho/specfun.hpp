#pragma once

#include "biortho/types.hpp"

#include <vector>

namespace biortho {

// Lanczos approximation, reflection below 1/2. Throws at nonpositive integers.
double gamma_fn(double x);
// log|Gamma(x)| for x > 0.
double lgamma_pos(double x);
// (a)_n by product.
double pochhammer(double a, int n);

// J_nu(x). Negative x only for integer nu.
double bessel_j(double nu, double x);
// J_nu(x) / x^nu, an even entire function of x; equals 1/(2^nu Gamma(nu+1)) at 0.
double bessel_j_scaled(double nu, double x);

// The three regimes, exposed for cross-checking.
double bessel_j_series(double nu, double x);
double bessel_j_miller(double nu, double x);
// Returns false when the Hankel expansion has not converged at this (nu, x).
bool bessel_j_asymptotic(double nu, double x, double& out);

// I_alpha(z) = Gamma(alpha+1) sum (z/2)^{2n} / (n! Gamma(n+alpha+1)), by series.
Cx script_i(double alpha, Cx z);
// I_alpha(ix) = 2^alpha Gamma(alpha+1) J_alpha(x)/x^alpha, through bessel_j_scaled.
double script_i_imag(double alpha, double x);

// E_alpha(ix).
Cx dunkl_kernel(double alpha, double x);
// E_alpha(z) for complex z by the series of the two I terms.
Cx dunkl_kernel(double alpha, Cx z);

struct ZeroTable {
    double nu;
    std::vector<double> zeros; // j_{nu,1} < j_{nu,2} < ...

    double operator[](int k) const { return zeros.at(static_cast<std::size_t>(k - 1)); }
    int size() const { return static_cast<int>(zeros.size()); }
    // s_n with s_0 = 0 and s_{-n} = -s_n.
    double signed_zero(int n) const;
};

ZeroTable bessel_zeros(double nu, int k_max);

// R_{n,a}(z) and h_{n,a}(w) = R_{n,a}(1/w), forward recurrence from R_{-1} = 0, R_0 = 1.
double lommel(int n, double a, double z);
double modified_lommel(int n, double a, double w);
Cx modified_lommel(int n, double a, Cx w);

} // namespace biortho
