#pragma once

#include "biortho/orthopoly.hpp"
#include "biortho/specfun.hpp"
#include "biortho/types.hpp"

#include <vector>

namespace biortho {

// Coefficients a_n, n = 1..size(), in the C_n^{(beta+1/2, alpha+1/2)} basis.
struct CoeffVector {
    std::vector<Cx> a;

    int size() const { return static_cast<int>(a.size()); }
    Cx at(int n) const { return n >= 1 && n <= size() ? a[static_cast<std::size_t>(n - 1)] : Cx(0.0); }
};

// The right inverse T_{beta,alpha} of the Dunkl operator on L^2(dmu_{beta+1,alpha}),
// truncated to the first N modes. Zeros of J_{alpha+beta+1} give the spectrum.
struct SpectralProblem {
    Params params;
    int N;
    ZeroTable zeros;

    SpectralProblem(Params p, int N_, int k_max = 10);
    double gamma() const { return params.sum(); }
    double j(int k) const;
};

struct TResult {
    CoeffVector out;
    double dropped = 0.0; // L^2(dmu_{beta,alpha}) norm of the mode pushed past N
};

// g in the C^{(beta+1/2)} basis; rewritten in the C^{(beta+3/2)} basis and shifted.
TResult apply_T(const SpectralProblem& sp, const CoeffVector& g);
// g_n, n = 0..size-1, in the C^{(beta+3/2, alpha+1/2)} basis.
TResult apply_T_raised(const SpectralProblem& sp, const std::vector<Cx>& g);
// Coefficients in the C^{(beta+3/2)} basis of sum a_n C_n^{(beta+1/2)}; index 0..N.
std::vector<Cx> to_raised(const Params& p, const CoeffVector& a);

// Partial sum of the kernel K_{beta,alpha}(t, r) with the given number of terms.
double T_kernel(const Params& p, double t, double r, int terms);

Poly to_poly(const Params& p, const CoeffVector& a); // real parts only
Cx evaluate(const Params& p, const CoeffVector& a, double t);

// Forward recurrence from a_1.
CoeffVector recurrence_coeffs(const SpectralProblem& sp, Cx lam, Cx a1, int N);
// The minimal solution of the recurrence for n >= 2 (backward recurrence), a_1 = 1.
// At an eigenvalue this is the eigenvector; elsewhere the n = 1 equation fails.
CoeffVector minimal_coeffs(const SpectralProblem& sp, Cx lam, int N);
// a_n = -(-+i)^{n-1} (g+n+1) J_{g+n+1}(j) / ((g+2) J_g(j)) at lam = +-i/j_k.
CoeffVector eigen_coeffs_bessel(const SpectralProblem& sp, int k, int sign, int N);

// +-i/j_{alpha+beta+1,k}, k = 1..k_max, as (+, -) pairs.
std::vector<Cx> eigenvalues(const SpectralProblem& sp, int k_max);
Cx eigenvalue(const SpectralProblem& sp, int k, int sign);

struct EigenfunctionValue {
    Cx series;
    Cx closed;
    double tail = 0.0;
    double residual() const { return std::abs(series - closed); }
};
EigenfunctionValue eigenfunction(const SpectralProblem& sp, int k, int sign, double t, int N);

// ||T g - lam g|| / (|lam| ||g||) in L^2(dmu_{beta+1,alpha}) for given coefficients.
double residual_for(const SpectralProblem& sp, Cx lam, const CoeffVector& a);
double eigen_residual(const SpectralProblem& sp, int k, int sign, int N);

// J_{g+n+1}(j) + h_{n-1,g+2}(1/j) J_g(j), relative to |J_g(j)|.
double jh_residual(const SpectralProblem& sp, int k, int n);

// sum_{n<=N} |a_n|^2 n^{2 beta - 1}
double summability(const Params& p, const CoeffVector& a);

// M with ||T g||_{beta} <= M ||g||_{beta+1}; sup over the closed form ratios.
double boundedness_constant(const Params& p);
// h_{n+1}^{(beta,alpha)} / h_n^{(beta+1,alpha)} in closed form.
double h_ratio(const Params& p, int n);
// int (1-t^2)^{-1} C_n dmu_{beta+1,alpha}, with (1-t^2) folded out of the measure. beta > 0.
double orthocomplement_inner(const Params& p, int n, int order = 120);

} // namespace biortho
