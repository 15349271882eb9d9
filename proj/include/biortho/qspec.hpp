#pragma once

#include "biortho/types.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biortho {

// Base q, the grid {+-q^k : k_min <= k <= k_max} and the truncation tolerance
// for infinite products and series. Most functions work in base Q = q^2.
struct QContext {
    double q;
    int k_min, k_max;
    double tol = 1e-18;
    double tail_tol = 1e-14; // boundary terms of Jackson sums, relative

    QContext(double q_, int k_min_, int k_max_, double tol_ = 1e-18);
    // k_max from tol, k_min keeping q^{k_min} near 1e6 (-20 and 60 at q = 0.5).
    static QContext with_defaults(double q, double tol = 1e-18);

    double Q() const { return q * q; }
    double grid(int k) const { return std::pow(q, k); }
    // k with x = +-q^k, or false when x is not a grid point.
    bool grid_index(double x, int& k) const;
};

class NonDecay : public std::runtime_error {
public:
    NonDecay(const std::string& msg, double boundary_) : std::runtime_error(msg), boundary(boundary_) {}
    double boundary;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (a; base)_n and (a; base)_inf.
Cx qpochhammer(const QContext& ctx, Cx a, double base, int n);
Cx qpochhammer_inf(const QContext& ctx, Cx a, double base);
double qpochhammer(const QContext& ctx, double a, double base, int n);
double qpochhammer_inf(const QContext& ctx, double a, double base);
// (q^e; q^2)_inf, exactly zero when e is a nonpositive even integer.
double qpow_poch_inf(const QContext& ctx, double e);

struct PhiResult {
    Cx value;
    int terms = 0;
    bool terminating = false;
};

// 2phi1(a, b; c; base; z). Terminates when a or b is base^{-n}; otherwise needs |z| < 1.
PhiResult phi21(const QContext& ctx, Cx a, Cx b, Cx c, double base, Cx z);

// J_nu^{(3)}(x; q^2) / x^nu, even in x. Grid points use the product form,
// where the leading terms vanish exactly; elsewhere the power series.
double qbessel3_scaled(const QContext& ctx, double nu, double x);
double qbessel3_scaled_grid(const QContext& ctx, double nu, int k);
double qbessel3_scaled_series(const QContext& ctx, double nu, double x);
// J_nu^{(3)}(x; q^2) for x > 0 (x = 0 allowed when nu >= 0).
double qbessel3(const QContext& ctx, double nu, double x);

struct JacksonResult {
    double value = 0.0;
    double boundary = 0.0; // largest retained term at the grid ends
    bool decayed = true;
};

// int_0^a f d_base x, truncated once terms fall below tol.
JacksonResult jackson_0a(const QContext& ctx, const std::function<double(double)>& f, double a, double base);
JacksonResult jackson_0a(const QContext& ctx, const std::function<double(double)>& f, double a);
// int_0^inf and int_R over the grid of ctx.
JacksonResult jackson_0inf(const QContext& ctx, const std::function<double(double)>& f);
JacksonResult jackson_line(const QContext& ctx, const std::function<double(double)>& f);

// The q-analogues of J_{a,n}: J_{a+n+1}(x q^{[n/2]}; q^2) / x^{a+1}.
double q_neumann(const QContext& ctx, double a, int n, double x);

// Little q-Jacobi polynomials in base Q and their generalised q-Gegenbauer companions.
class QJacobiFamily {
public:
    QJacobiFamily(QContext ctx, Params p);

    // p_n(x; Q^alpha, Q^beta; Q)
    double little(int n, double x) const;
    // p_n^{(alpha,beta)}(x; Q), tends to P_n^{(alpha,beta)}(1-2x) as q -> 1
    double normalized(int n, double x) const;
    // C_n^{(beta+1/2, alpha+1/2)}(t; Q)
    double C(int n, double t) const;
    // h_{n,q}^{(beta,alpha)}
    double norm(int n) const;
    // (Q t^2; Q)_inf / (Q^{beta+1} t^2; Q)_inf
    double weight(double t) const;
    // right side of the Q-orthogonality of p_n^{(alpha,beta)}(x^2; Q) in d_q x
    double ortho_closed(int n) const;

    const QContext& context() const { return ctx_; }
    const Params& params() const { return p_; }

private:
    QContext ctx_;
    Params p_;
};

// E_alpha(ix; q^2).
Cx q_dunkl_kernel(const QContext& ctx, double alpha, double x);
// (Q^{alpha+1}; Q)_inf / (Q; Q)_inf, the constant in dmu_{q,alpha}
double q_measure_constant(const QContext& ctx, double alpha);
// int f dmu_{q,alpha} over the grid.
Cx q_integrate(const QContext& ctx, double alpha, const std::function<Cx(double)>& f);

// F_{alpha,q} f(y) and H_{alpha,q} f(x) on grid points. Throw NonDecay when the
// summand does not decay at the grid ends.
Cx q_transform(const QContext& ctx, double alpha, const std::function<Cx(double)>& f, double y);
double q_hankel(const QContext& ctx, double alpha, const std::function<double(double)>& f, double x);

struct QWeberSides {
    double lhs, rhs;
};
// int_0^inf x^{-lam} J_mu(q^m x; q^2) J_nu(q^n x; q^2) d_q x and its closed form.
QWeberSides qweber(const QContext& ctx, double lam, double mu, double nu, int m, int n);

// Integrals I_-(alpha,beta,n)(t,q), I_+(alpha,beta,n)(t,q): Jackson side and closed form.
// The closed form of I_+ uses (q^{2alpha+2n+2}; q^2)_inf.
QWeberSides q_bessel_jacobi_minus(const QContext& ctx, const Params& p, int n, double t);
QWeberSides q_bessel_jacobi_plus(const QContext& ctx, const Params& p, int n, double t);

// F_{alpha,q} of the q-Neumann function J_{alpha+beta,k} by Jackson sum, and the closed
// form with the q^{[k/2] beta} factor.
Cx q_transform_neumann(const QContext& ctx, const Params& p, int k, double t);
Cx q_transform_neumann_closed(const QContext& ctx, const Params& p, int k, double t);

struct QPlaneWave {
    Cx with_factor;    // terms carry q^{-[n/2] beta}
    Cx without_factor; // as printed
};
// Partial sums of the q-plane wave expansion, n < N, at grid points x, t.
QPlaneWave q_planewave_partial_sum(const QContext& ctx, const Params& p, double x, double t, int N);
// The alpha = -1/2 specialisation with little q-ultraspherical polynomials C_n^beta(t; q^2).
Cx q_ultraspherical_planewave(const QContext& ctx, double beta, double x, double t, int N);

} // namespace biortho
