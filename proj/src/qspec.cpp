#include "biortho/qspec.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace biortho {

namespace {

constexpr int max_series_terms = 20000;

// (x^2 Q; Q)_inf / (x^2 Q^{1+b}; Q)_inf with grid-exact zeros
double grid_weight(const QContext& ctx, double b, double t) {
    int m;
    if (t == 0.0) return 1.0;
    if (ctx.grid_index(t, m)) return qpow_poch_inf(ctx, 2.0 + 2.0 * m) / qpow_poch_inf(ctx, 2.0 + 2.0 * b + 2.0 * m);
    const double Q = ctx.Q();
    return qpochhammer_inf(ctx, t * t * Q, Q) / qpochhammer_inf(ctx, t * t * std::pow(Q, 1.0 + b), Q);
}

// p_n(x; Q^a, Q^b; Q) = 2phi1(Q^{-n}, Q^{n+a+b+1}; Q^{a+1}; Q; Qx). The terms alternate and grow
// like Q^{-n^2/2} near x = 1, so the sum runs in quad precision.
double little_sum(double Q, double a, double b, int n, double x) {
    using quad = boost::multiprecision::cpp_bin_float_quad;
    const quad Qq(Q), xq(x);
    const quad Qa1 = pow(Qq, quad(a + 1.0)), Qn = pow(Qq, quad(n + a + b + 1.0));
    quad Qj = 1, Qjn = pow(Qq, -n), term = 1, sum = 1;
    for (int j = 0; j < n; ++j) {
        term *= (1 - Qjn) * (1 - Qn * Qj) / ((1 - Qa1 * Qj) * (1 - Qq * Qj)) * Qq * xq;
        sum += term;
        Qj *= Qq;
        Qjn *= Qq;
    }
    return static_cast<double>(sum);
}

double little_normalized(const QContext& ctx, double a, double b, int n, double x) {
    const double Q = ctx.Q();
    return std::pow(ctx.q, -n * (a + 1.0)) * qpochhammer(ctx, std::pow(Q, a + 1.0), Q, n) / qpochhammer(ctx, Q, Q, n) *
           little_sum(Q, a, b, n, x);
}

// right side of int_0^1 w(x^2) p_n^{(a,b)}(x^2) p_m^{(a,b)}(x^2) x^{2a+1} d_q x
double ortho_closed_ab(const QContext& ctx, double a, double b, int n) {
    const double q = ctx.q;
    return (1.0 - q) / (1.0 - std::pow(q, 4.0 * n + 2.0 * a + 2.0 * b + 2.0)) * qpow_poch_inf(ctx, 2.0 + 2.0 * n) *
           qpow_poch_inf(ctx, 2.0 * a + 2.0 * b + 2.0 + 2.0 * n) /
           (qpow_poch_inf(ctx, 2.0 * a + 2.0 + 2.0 * n) * qpow_poch_inf(ctx, 2.0 * b + 2.0 + 2.0 * n));
}

template <class T>
JacksonResult finish(T value, double abs_sum, double boundary, double tail_tol) {
    JacksonResult r;
    r.value = value;
    r.boundary = boundary;
    r.decayed = boundary <= tail_tol * abs_sum || abs_sum == 0.0;
    return r;
}

// (1-q) sum_k g(k) over the grid of ctx; g(k) already includes the q^k of d_q x
template <class G>
JacksonResult sum_grid(const QContext& ctx, G&& g) {
    double sum = 0.0, abs_sum = 0.0, lo = 0.0, hi = 0.0;
    for (int k = ctx.k_min; k <= ctx.k_max; ++k) {
        const double t = g(k);
        sum += t;
        abs_sum += std::abs(t);
        if (k == ctx.k_min) lo = std::abs(t);
        if (k == ctx.k_max) hi = std::abs(t);
    }
    const double s = 1.0 - ctx.q;
    return finish(s * sum, s * abs_sum, s * std::max(lo, hi), ctx.tail_tol);
}

void require_decay(const JacksonResult& r, const char* what) {
    if (!r.decayed)
        throw NonDecay(std::string(what) + ": summand does not decay at the grid ends (boundary term " +
                           std::to_string(r.boundary) + ")",
                       r.boundary);
}

} // namespace

QContext::QContext(double q_, int k_min_, int k_max_, double tol_) : q(q_), k_min(k_min_), k_max(k_max_), tol(tol_) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("QContext: q must lie in (0,1)");
    if (k_min > 0 || k_max < 0) throw std::domain_error("QContext: need k_min <= 0 <= k_max");
    if (!(tol > 0.0)) throw std::domain_error("QContext: tolerance must be positive");
}

QContext QContext::with_defaults(double q, double tol) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("QContext: q must lie in (0,1)");
    const int k_max = static_cast<int>(std::ceil(std::log(tol) / std::log(q) - 1e-9));
    const int k_min = -static_cast<int>(std::ceil(std::log(1e6) / -std::log(q) - 1e-9));
    return QContext(q, k_min, k_max, tol);
}

bool QContext::grid_index(double x, int& k) const {
    if (x == 0.0 || !std::isfinite(x)) return false;
    const double ax = std::abs(x);
    const long r = std::lround(std::log(ax) / std::log(q));
    if (std::abs(ax - std::pow(q, static_cast<double>(r))) > 1e-12 * ax) return false;
    k = static_cast<int>(r);
    return true;
}

Cx qpochhammer(const QContext&, Cx a, double base, int n) {
    if (n < 0) throw std::domain_error("qpochhammer: n must be >= 0");
    Cx p = 1.0;
    double bk = 1.0;
    for (int k = 0; k < n; ++k, bk *= base) p *= 1.0 - a * bk;
    return p;
}

double qpochhammer(const QContext& ctx, double a, double base, int n) { return qpochhammer(ctx, Cx(a), base, n).real(); }

Cx qpochhammer_inf(const QContext& ctx, Cx a, double base) {
    if (!(std::abs(base) < 1.0)) throw std::domain_error("qpochhammer_inf: needs |base| < 1");
    Cx p = 1.0;
    Cx t = a;
    for (int k = 0; k < max_series_terms; ++k) {
        p *= 1.0 - t;
        if (std::abs(t) < ctx.tol) return p;
        t *= base;
    }
    throw NonConvergence("qpochhammer_inf: product did not settle");
}

double qpochhammer_inf(const QContext& ctx, double a, double base) { return qpochhammer_inf(ctx, Cx(a), base).real(); }

double qpow_poch_inf(const QContext& ctx, double e) {
    const double h = 0.5 * e;
    if (h <= 0.0 && std::abs(h - std::round(h)) < 1e-12) return 0.0;
    return qpochhammer_inf(ctx, std::pow(ctx.q, e), ctx.Q());
}

PhiResult phi21(const QContext& ctx, Cx a, Cx b, Cx c, double base, Cx z) {
    PhiResult r;
    Cx term = 1.0, sum = 1.0;
    double bk = 1.0;
    for (int n = 0; n < max_series_terms; ++n, bk *= base) {
        const Cx fa = 1.0 - a * bk, fb = 1.0 - b * bk;
        // a or b equal to base^{-n}: the series stops here
        if (std::abs(fa) < 1e-12 || std::abs(fb) < 1e-12) {
            r.value = sum;
            r.terms = n + 1;
            r.terminating = true;
            return r;
        }
        if (n == 0 && !(std::abs(z) < 1.0)) {
            // still allowed if a later factor terminates it
            bool stops = false;
            double bj = 1.0;
            for (int j = 0; j < 400 && !stops; ++j, bj *= base)
                stops = std::abs(1.0 - a * bj) < 1e-12 || std::abs(1.0 - b * bj) < 1e-12;
            if (!stops) throw NonConvergence("phi21: |z| >= 1 and the series does not terminate");
        }
        term *= fa * fb / ((1.0 - c * bk) * (1.0 - base * bk)) * z;
        sum += term;
        if (std::abs(term) <= ctx.tol * std::abs(sum) && n > 2) {
            r.value = sum;
            r.terms = n + 2;
            return r;
        }
    }
    throw NonConvergence("phi21: no convergence");
}

double qbessel3_scaled_series(const QContext& ctx, double nu, double x) {
    const double Q = ctx.Q(), x2 = x * x;
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < max_series_terms; ++n) {
        term *= -std::pow(Q, n + 1.0) * x2 / ((1.0 - std::pow(Q, nu + 1.0 + n)) * (1.0 - std::pow(Q, n + 1.0)));
        sum += term;
        if (std::abs(term) <= ctx.tol * std::abs(sum) && std::pow(Q, n + 1.0) * x2 < 0.5) break;
    }
    return qpochhammer_inf(ctx, std::pow(Q, nu + 1.0), Q) / qpochhammer_inf(ctx, Q, Q) * sum;
}

double qbessel3_scaled_grid(const QContext& ctx, double nu, int k) {
    if (!(nu > -1.0)) throw std::domain_error("qbessel3: nu must exceed -1");
    // x^2 = Q^k; J_nu(x)/x^nu = (1/(Q;Q)_inf) sum_n (-1)^n Q^{n(n-1)/2 + (nu+1)n} (Q^{1+k+n}; Q)_inf / (Q;Q)_n,
    // and (Q^{1+k+n}; Q)_inf = 0 for n <= -k - 1
    const double Q = ctx.Q(), lQ = std::log(Q);
    const int n0 = std::max(0, -k);
    double P = qpochhammer_inf(ctx, std::pow(Q, 1.0 + k + n0), Q);
    double QQn = qpochhammer(ctx, Q, Q, n0);
    double sum = 0.0;
    for (int n = n0; n < n0 + max_series_terms; ++n) {
        const double mag = std::exp((0.5 * n * (n - 1.0) + (nu + 1.0) * n) * lQ) * P / QQn;
        const double term = n % 2 ? -mag : mag;
        sum += term;
        if (n > n0 + 1 && std::abs(term) <= ctx.tol * std::abs(sum)) break;
        if (mag == 0.0 && n > n0) break;
        P /= 1.0 - std::pow(Q, 1.0 + k + n);
        QQn *= 1.0 - std::pow(Q, n + 1.0);
    }
    return sum / qpochhammer_inf(ctx, Q, Q);
}

double qbessel3_scaled(const QContext& ctx, double nu, double x) {
    int k;
    if (ctx.grid_index(x, k)) return qbessel3_scaled_grid(ctx, nu, k);
    return qbessel3_scaled_series(ctx, nu, x);
}

double qbessel3(const QContext& ctx, double nu, double x) {
    if (x < 0.0) throw std::domain_error("qbessel3: x must be >= 0 (use qbessel3_scaled)");
    if (x == 0.0) {
        if (nu < 0.0) throw std::domain_error("qbessel3: singular at 0 for nu < 0");
        return nu == 0.0 ? qbessel3_scaled(ctx, 0.0, 0.0) : 0.0;
    }
    return std::pow(x, nu) * qbessel3_scaled(ctx, nu, x);
}

JacksonResult jackson_0a(const QContext& ctx, const std::function<double(double)>& f, double a, double base) {
    double sum = 0.0, abs_sum = 0.0, bn = 1.0, last = 0.0;
    int small = 0;
    for (int n = 0; n < max_series_terms; ++n, bn *= base) {
        const double t = f(a * bn) * bn;
        sum += t;
        abs_sum += std::abs(t);
        last = std::abs(t);
        small = last <= ctx.tol * abs_sum ? small + 1 : 0;
        if (small >= 3) break;
    }
    JacksonResult r = finish((1.0 - base) * a * sum, abs_sum, last, ctx.tail_tol);
    r.boundary *= (1.0 - base) * std::abs(a);
    return r;
}

JacksonResult jackson_0a(const QContext& ctx, const std::function<double(double)>& f, double a) {
    return jackson_0a(ctx, f, a, ctx.q);
}

JacksonResult jackson_0inf(const QContext& ctx, const std::function<double(double)>& f) {
    return sum_grid(ctx, [&](int k) {
        const double x = ctx.grid(k);
        return f(x) * x;
    });
}

JacksonResult jackson_line(const QContext& ctx, const std::function<double(double)>& f) {
    const auto pos = jackson_0inf(ctx, f);
    const auto neg = jackson_0inf(ctx, [&](double x) { return f(-x); });
    JacksonResult r;
    r.value = pos.value + neg.value;
    r.boundary = std::max(pos.boundary, neg.boundary);
    r.decayed = pos.decayed && neg.decayed;
    return r;
}

double q_neumann(const QContext& ctx, double a, int n, double x) {
    if (n < 0) throw std::domain_error("q_neumann: n must be >= 0");
    const int h = n / 2;
    const double s = ctx.grid(h);
    return std::pow(s, a + n + 1.0) * std::pow(x, n) * qbessel3_scaled(ctx, a + n + 1.0, x * s);
}

QJacobiFamily::QJacobiFamily(QContext ctx, Params p) : ctx_(ctx), p_(p) {}

double QJacobiFamily::little(int n, double x) const {
    if (n < 0) throw std::domain_error("little_qjacobi: n must be >= 0");
    return little_sum(ctx_.Q(), p_.alpha, p_.beta, n, x);
}

double QJacobiFamily::normalized(int n, double x) const {
    if (n < 0) throw std::domain_error("little_qjacobi: n must be >= 0");
    return little_normalized(ctx_, p_.alpha, p_.beta, n, x);
}

double QJacobiFamily::C(int n, double t) const {
    if (n < 0) throw std::domain_error("q-Gegenbauer: n must be >= 0");
    const double Q = ctx_.Q(), a = p_.alpha, g = p_.sum();
    const int m = n / 2;
    const double sgn = m % 2 ? -1.0 : 1.0;
    if (n % 2 == 0)
        return sgn * qpochhammer(ctx_, std::pow(Q, g + 1.0), Q, m) / qpochhammer(ctx_, std::pow(Q, a + 1.0), Q, m) *
               little_normalized(ctx_, a, p_.beta, m, t * t);
    return sgn * qpochhammer(ctx_, std::pow(Q, g + 1.0), Q, m + 1) / qpochhammer(ctx_, std::pow(Q, a + 1.0), Q, m + 1) * t *
           little_normalized(ctx_, a + 1.0, p_.beta, m, t * t);
}

double QJacobiFamily::norm(int n) const {
    if (n < 0) throw std::domain_error("q-Gegenbauer norm: n must be >= 0");
    const double Q = ctx_.Q(), a = p_.alpha, g = p_.sum();
    const int m = n / 2;
    const int len = n % 2 ? m + 1 : m;
    const double c = qpochhammer(ctx_, std::pow(Q, g + 1.0), Q, len) / qpochhammer(ctx_, std::pow(Q, a + 1.0), Q, len);
    return c * c * q_measure_constant(ctx_, a) / (1.0 - ctx_.q) *
           ortho_closed_ab(ctx_, n % 2 ? a + 1.0 : a, p_.beta, m);
}

double QJacobiFamily::weight(double t) const { return grid_weight(ctx_, p_.beta, t); }

double QJacobiFamily::ortho_closed(int n) const { return ortho_closed_ab(ctx_, p_.alpha, p_.beta, n); }

double q_measure_constant(const QContext& ctx, double alpha) {
    return qpow_poch_inf(ctx, 2.0 * alpha + 2.0) / qpow_poch_inf(ctx, 2.0);
}

Cx q_dunkl_kernel(const QContext& ctx, double alpha, double x) {
    if (!(alpha > -1.0)) throw std::domain_error("q_dunkl_kernel: alpha must exceed -1");
    return (qbessel3_scaled(ctx, alpha, x) + Cx(0.0, x * qbessel3_scaled(ctx, alpha + 1.0, x))) /
           q_measure_constant(ctx, alpha);
}

Cx q_integrate(const QContext& ctx, double alpha, const std::function<Cx(double)>& f) {
    // dmu_{q,alpha} = K/(2(1-q)) |x|^{2alpha+1} d_q x
    Cx sum = 0.0;
    double abs_sum = 0.0, lo = 0.0, hi = 0.0;
    for (int k = ctx.k_min; k <= ctx.k_max; ++k) {
        const double x = ctx.grid(k);
        const Cx t = std::pow(x, 2.0 * alpha + 2.0) * (f(x) + f(-x));
        sum += t;
        abs_sum += std::abs(t);
        if (k == ctx.k_min) lo = std::abs(t);
        if (k == ctx.k_max) hi = std::abs(t);
    }
    const double c = 0.5 * q_measure_constant(ctx, alpha);
    require_decay(finish(0.0, abs_sum, std::max(lo, hi), ctx.tail_tol), "q_integrate");
    return c * sum;
}

Cx q_transform(const QContext& ctx, double alpha, const std::function<Cx(double)>& f, double y) {
    return q_integrate(ctx, alpha, [&](double x) { return f(x) * q_dunkl_kernel(ctx, alpha, -y * x); });
}

double q_hankel(const QContext& ctx, double alpha, const std::function<double(double)>& f, double x) {
    double sum = 0.0, abs_sum = 0.0, lo = 0.0, hi = 0.0;
    for (int k = ctx.k_min; k <= ctx.k_max; ++k) {
        const double y = ctx.grid(k);
        const double t = std::pow(y, 2.0 * alpha + 2.0) * qbessel3_scaled(ctx, alpha, x * y) * f(y);
        sum += t;
        abs_sum += std::abs(t);
        if (k == ctx.k_min) lo = std::abs(t);
        if (k == ctx.k_max) hi = std::abs(t);
    }
    require_decay(finish(0.0, abs_sum, std::max(lo, hi), ctx.tail_tol), "q_hankel");
    return sum;
}

QWeberSides qweber(const QContext& ctx, double lam, double mu, double nu, int m, int n) {
    if (!(lam > -1.0 && lam < mu + nu + 1.0)) throw std::domain_error("qweber: need -1 < lam < mu + nu + 1");
    if (m < 0 || n < 0) throw std::domain_error("qweber: m, n must be >= 0");
    const double q = ctx.q, Q = ctx.Q();
    // J_mu(q^j) = q^{j mu} J_mu(q^j)/q^{j mu}
    const auto lhs = sum_grid(ctx, [&](int k) {
        return std::pow(q, k * (1.0 - lam)) * std::pow(q, (m + k) * mu) * qbessel3_scaled_grid(ctx, mu, m + k) *
               std::pow(q, (n + k) * nu) * qbessel3_scaled_grid(ctx, nu, n + k);
    });
    require_decay(lhs, "qweber");
    const auto phi = phi21(ctx, std::pow(q, 1.0 - lam + mu + nu), std::pow(q, 1.0 - lam + mu - nu), std::pow(q, 2.0 * mu + 2.0),
                           Q, std::pow(q, 2.0 * m - 2.0 * n + 1.0 + lam + nu - mu));
    const double rhs = (1.0 - q) * std::pow(q, n * (lam - 1.0) + (m - n) * mu) * qpow_poch_inf(ctx, 1.0 + lam + nu - mu) *
                       qpow_poch_inf(ctx, 2.0 * mu + 2.0) /
                       (qpow_poch_inf(ctx, 1.0 - lam + nu + mu) * qpow_poch_inf(ctx, 2.0)) * phi.value.real();
    return {lhs.value, rhs};
}

namespace {

double bessel_jacobi_lhs(const QContext& ctx, const Params& p, int n, int m, double sgn_beta) {
    const double q = ctx.q, al = p.alpha, nu = p.sum() + 2.0 * n + 1.0;
    // t^{-alpha}/(1-q) int x^{-+beta} J_alpha(xt) J_nu(q^n x) d_q x with t = q^m, x = q^k
    const auto r = sum_grid(ctx, [&](int k) {
        return std::pow(q, k * (1.0 + sgn_beta * p.beta + al)) * qbessel3_scaled_grid(ctx, al, k + m) * std::pow(q, (n + k) * nu) *
               qbessel3_scaled_grid(ctx, nu, n + k);
    });
    require_decay(r, "q_bessel_jacobi");
    return r.value / (1.0 - q);
}

int grid_t(const QContext& ctx, double t) {
    int m;
    if (!(t > 0.0) || !ctx.grid_index(t, m)) throw std::domain_error("t must be a positive grid point q^m");
    return m;
}

} // namespace

QWeberSides q_bessel_jacobi_minus(const QContext& ctx, const Params& p, int n, double t) {
    const int m = grid_t(ctx, t);
    const double lhs = bessel_jacobi_lhs(ctx, p, n, m, -1.0);
    if (m < 0) return {lhs, 0.0};
    const QJacobiFamily fam(ctx, p);
    const double be = p.beta;
    const double rhs = std::pow(ctx.q, n * be) * qpow_poch_inf(ctx, 2.0 + 2.0 * be + 2.0 * n) / qpow_poch_inf(ctx, 2.0 + 2.0 * n) *
                       fam.weight(t) * fam.normalized(n, t * t);
    return {lhs, rhs};
}

QWeberSides q_bessel_jacobi_plus(const QContext& ctx, const Params& p, int n, double t) {
    if (!(p.beta < 1.0)) throw std::domain_error("q_bessel_jacobi_plus: needs beta < 1");
    const int m = grid_t(ctx, t);
    if (m < 1) throw std::domain_error("q_bessel_jacobi_plus: t must lie in (0,1)");
    const double lhs = bessel_jacobi_lhs(ctx, p, n, m, 1.0);
    const QJacobiFamily fam(ctx, p);
    const double al = p.alpha, be = p.beta;
    const double rhs = std::pow(ctx.q, -n * be) * qpow_poch_inf(ctx, 2.0 * al + 2.0 * n + 2.0) /
                       qpow_poch_inf(ctx, 2.0 + 2.0 * n + 2.0 * al + 2.0 * be) * fam.normalized(n, t * t);
    return {lhs, rhs};
}

Cx q_transform_neumann(const QContext& ctx, const Params& p, int k, double t) {
    const double g = p.sum();
    return q_transform(ctx, p.alpha, [&](double x) { return Cx(q_neumann(ctx, g, k, x)); }, t);
}

Cx q_transform_neumann_closed(const QContext& ctx, const Params& p, int k, double t) {
    if (std::abs(t) > 1.0) return 0.0;
    const QJacobiFamily fam(ctx, p);
    const double g = p.sum(), q = ctx.q;
    const double Qk = fam.weight(t) * fam.C(k, t) / fam.norm(k);
    return ipow(-k) * std::pow(q, (k / 2) * p.beta) / (1.0 - std::pow(q, 2.0 * k + 2.0 * g + 2.0)) *
           q_measure_constant(ctx, g) * Qk;
}

QPlaneWave q_planewave_partial_sum(const QContext& ctx, const Params& p, double x, double t, int N) {
    if (N < 1) throw std::domain_error("q_planewave: N must be >= 1");
    if (std::abs(t) > 1.0) throw std::domain_error("q_planewave: |t| must be <= 1");
    const QJacobiFamily fam(ctx, p);
    const double g = p.sum(), q = ctx.q;
    Cx with = 0.0, without = 0.0;
    for (int n = 0; n < N; ++n) {
        const Cx term = ipow(n) * (1.0 - std::pow(q, 2.0 * g + 2.0 * n + 2.0)) * q_neumann(ctx, g, n, x) * fam.C(n, t);
        without += term;
        with += std::pow(q, -(n / 2) * p.beta) * term;
    }
    const double c = 1.0 / q_measure_constant(ctx, g);
    return {c * with, c * without};
}

Cx q_ultraspherical_planewave(const QContext& ctx, double beta, double x, double t, int N) {
    if (!(beta > 0.0)) throw std::domain_error("q_ultraspherical_planewave: beta must be positive");
    return q_planewave_partial_sum(ctx, Params(-0.5, beta - 0.5), x, t, N).with_factor;
}

} // namespace biortho
