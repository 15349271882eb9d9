#pragma once

#include "biortho/quad.hpp"
#include "biortho/specfun.hpp"
#include "biortho/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace biortho {

// Neumann function J_{a+n+1}(x) / x^{a+1}; parity (-1)^n.
double neumann_j(double a, int n, double x);

// A kernel K(x,t) with its measure on I = [-1,1], written as scale * dmu_alpha.
// Lebesgue dt is alpha = -1/2 with scale sqrt(2 pi).
struct KernelSystem {
    std::string name;
    std::function<Cx(double, double)> kernel;
    double alpha;
    double scale = 1.0;
};

KernelSystem fourier_system();
KernelSystem dunkl_system(double alpha);

// Biorthonormal pair on I. Q_n(t) = (1-t^2)^weight q_n(t); the weight is
// folded into the quadrature rule.
struct BiorthSystem {
    std::string name;
    std::function<Cx(int, double)> P;
    std::function<Cx(int, double)> q;
    double weight = 0.0;
    bool signed_index = false; // indices in Z, else n >= 0
    std::function<Cx(int, double)> S_closed; // closed form of S_n(x) when known
};

BiorthSystem fourier_exponentials();
// C_n^beta against (1-t^2)^{beta-1/2} C_n^beta / h_n; beta = 0 uses Chebyshev T_n.
BiorthSystem gegenbauer_system(double beta);
BiorthSystem dunkl_sampling_system(double alpha, int k_max);
// (P_n, Q_n) built from the generalised Gegenbauer polynomials.
BiorthSystem neumann_system(const Params& p);

double gegenbauer_norm(double beta, int n);

// scale * int_I F(t) (1-t^2)^weight dmu_alpha(t)
Cx integrate_on(const KernelSystem& sys, double weight, const std::function<Cx(double)>& F, int order = 120);
// int_I P_n conj(Q_m) dmu
Cx biorth_pair(const KernelSystem& sys, const BiorthSystem& bio, int n, int m, int order = 120);

struct TruncatedSeries {
    std::vector<Cx> coeffs;
    int first = 0; // index of coeffs[0]
    int N = 0;
    double tail_estimate = 0.0;

    int last() const { return first + static_cast<int>(coeffs.size()) - 1; }
    Cx at(int n) const { return coeffs.at(static_cast<std::size_t>(n - first)); }
};

// S_n(x) = int_I K(x,t) conj(Q_n(t)) dmu(t) by quadrature; |n| <= N or 0 <= n < N.
TruncatedSeries expand_kernel(const KernelSystem& sys, const BiorthSystem& bio, double x, int N, int order = 120);
// sum_n P_n(t) S_n(x)
Cx kernel_partial_sum(const BiorthSystem& bio, const TruncatedSeries& s, double t);

// Gegenbauer's plane wave, Gamma(beta) sum_{n<N} i^n (beta+n) (x/2)^{-beta} J_{beta+n}(x) C_n^beta(t).
Cx gegenbauer_planewave_partial_sum(double beta, double x, double t, int N);
// The Dunkl analogue with generalised Gegenbauer polynomials.
Cx planewave_partial_sum(const Params& p, double x, double t, int N);

// f(x) = int_I u(t) E_alpha(ixt) dmu_alpha(t), u(t) = (1-t^2)^weight v(t).
class PWFunction {
public:
    PWFunction(double alpha, std::function<double(double)> v, double weight = 0.0);
    Cx operator()(double x) const;
    double alpha() const { return alpha_; }
    double weight() const { return weight_; }
    double density(double t) const { return v_(t); }

private:
    double alpha_, weight_;
    std::function<double(double)> v_;
};

// Truncated sampling series over the zeros of J_{alpha+1}, |n| <= N.
class SamplingSeries {
public:
    SamplingSeries(const PWFunction& f, int N);
    Cx operator()(double x) const;
    const ZeroTable& zeros() const { return zeros_; }
    Cx sample(int n) const { return samples_.at(static_cast<std::size_t>(n + N_)); }

private:
    double alpha_;
    int N_;
    ZeroTable zeros_;
    std::vector<Cx> samples_; // f(s_n), n = -N..N
    std::vector<double> scale_; // 1 / (2(alpha+1) I_alpha(i s_n))
};

Cx dunkl_sampling_sum(const PWFunction& f, double x, int N);

// Paired forms of the sampling series for even and odd sample sequences
// (f(s_{-n}) = +-f(s_n)); samples[n] = f(s_n), n = 0..N.
double hankel_sampling_even(double alpha, const ZeroTable& s, const std::vector<double>& samples, double x);
double hankel_sampling_odd(double alpha, const ZeroTable& s, const std::vector<double>& samples, double x);

// a_n(f), n < N, from the real-line integral against the Neumann functions.
// The integral is swapped with the defining integral of f, which leaves
// Bessel-product integrals handled by integrate_bessel_product. Needs beta < 1.
TruncatedSeries fourier_neumann_coeffs(const Params& p, const PWFunction& f, int N, int order = 24);
// The same coefficients from the density: a_n = 2^{g+1} Gamma(g+1) i^n int u C_n dmu_alpha.
TruncatedSeries fourier_neumann_coeffs_density(const Params& p, const PWFunction& f, int N, int order = 120);
// sum a_n (alpha+beta+n+1) J_{alpha+beta,n}(x)
Cx fourier_neumann_sum(const Params& p, const TruncatedSeries& a, double x);

// Dunkl transform of J_{alpha+beta,k} at t by oscillatory quadrature, and its closed form.
Cx dunkl_transform_neumann(const Params& p, int k, double t);
Cx dunkl_transform_neumann_closed(const Params& p, int k, double t);
struct BesselJacobiForm {
    double quadrature, closed;
};
// I_-(t) = t^{-alpha} int_0^inf x^{-beta} J_{g+2n+1}(x) J_alpha(xt) dx, g = alpha+beta, and its
// Jacobi-polynomial closed form (zero for t > 1). t > 0, t != 1.
BesselJacobiForm bessel_jacobi_minus(const Params& p, int n, double t);
// I_+(t), the same with x^{beta}; 0 < t < 1 and beta < 1.
BesselJacobiForm bessel_jacobi_plus(const Params& p, int n, double t);

// int_R J_{a,n} J_{a,m} dmu_a by oscillatory quadrature.
double neumann_inner(double a, int n, int m);

// int_R S_n conj(T_m) dx for the Gegenbauer system, T_m = conj(K(chi_I P_m)).
// Swapped to int_I P_m(t) [int_R S_n(x) e^{-ixt} dx] dt / sqrt(2 pi); the inner
// integral is a Bessel product integral. beta > 0.
Cx gegenbauer_st_pair(double beta, int n, int m, int order = 16);

double hankel_corollary_sum(const Params& p, double x, double t, int N);

// int_{-1}^{1} |E_alpha(ixr)|^2 dmu_alpha(r) in closed form.
double kernel_norm_sq(double alpha, double x);

} // namespace biortho
