#pragma once

#include "biortho/types.hpp"

#include <vector>

namespace biortho {

// Dense monomial coefficients, c[k] multiplies t^k.
struct Poly {
    std::vector<double> c;

    double operator()(double t) const;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Poly operator-(const Poly& o) const;
    Poly operator+(const Poly& o) const;
    Poly operator*(double s) const;
    double max_abs_coeff() const;
};

struct JacobiFamily {
    double a, b;

    JacobiFamily(double a_, double b_);
    double operator()(int n, double y) const;
    // Terminating 2F1 form; cancellation grows quickly with n near y = -1.
    double hypergeometric(int n, double y) const;
    double recurrence(int n, double y) const;
};

// Degree at or below which jacobi evaluation uses the hypergeometric sum.
inline constexpr int jacobi_sum_max_degree = 6;

// C_n^{(beta+1/2, alpha+1/2)} and h_n^{(beta, alpha)}.
struct GenGegenbauerFamily {
    Params params;

    explicit GenGegenbauerFamily(Params p) : params(p) {}
    double operator()(int n, double t) const;
    void batch(int n, const double* t, double* out, std::size_t m) const;
    double norm(int n) const;
    Poly poly(int n) const;
};

// Lambda_alpha on polynomials.
Poly dunkl_apply_poly(double alpha, const Poly& p);

struct ConnectionCoeffs {
    double A, B;
};
// (alpha+beta+1)(1-r^2) C_{n-1}^{(beta+3/2)} = A_n C_{n-1}^{(beta+1/2)} - B_n C_{n+1}^{(beta+1/2)}.
ConnectionCoeffs gengeg_connection(const Params& p, int n);
// C_n^{(beta+1/2)} = c_n (C_n^{(beta+3/2)} - C_{n-2}^{(beta+3/2)}), returns c_n.
double gengeg_lowering(const Params& p, int n);

// Classical C_n^lambda(t), lambda > -1/2, lambda != 0.
double gegenbauer(double lambda, int n, double t);
// Chebyshev T_n(t), the lambda = 0 branch.
double chebyshev_t(int n, double t);

} // namespace biortho
