#include "biortho/biortho.hpp"

#include "biortho/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace biortho {

namespace {

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// 2^{a+1} Gamma(a+1)
double two_gamma(double a) { return std::exp((a + 1.0) * std::log(2.0) + lgamma_pos(a + 1.0)); }

Measure weighted(double alpha, double weight) { return Measure{Measure::Kind::mu_beta_alpha, alpha, weight}; }

} // namespace

double neumann_j(double a, int n, double x) {
    if (n < 0) throw std::domain_error("neumann_j: n must be >= 0");
    return std::pow(x, n) * bessel_j_scaled(a + n + 1.0, x);
}

KernelSystem fourier_system() {
    return {"fourier", [](double x, double t) { return std::exp(Cx(0.0, x * t)) / std::sqrt(2.0 * pi); }, -0.5,
            std::sqrt(2.0 * pi)};
}

KernelSystem dunkl_system(double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("dunkl_system: alpha must exceed -1");
    return {"dunkl", [alpha](double x, double t) { return dunkl_kernel(alpha, x * t); }, alpha, 1.0};
}

BiorthSystem fourier_exponentials() {
    BiorthSystem b;
    b.name = "exponentials";
    b.P = [](int n, double t) { return std::exp(Cx(0.0, pi * n * t)) / std::sqrt(2.0); };
    b.q = b.P;
    b.signed_index = true;
    b.S_closed = [](int n, double x) -> Cx {
        const double d = x - pi * n;
        if (d == 0.0) return 1.0 / std::sqrt(pi);
        return std::sin(d) / (std::sqrt(pi) * d);
    };
    return b;
}

double gegenbauer_norm(double beta, int n) {
    if (beta == 0.0) return n == 0 ? pi : 0.5 * pi;
    double ratio = 1.0; // (2 beta)_n / n!
    for (int k = 0; k < n; ++k) ratio *= (2.0 * beta + k) / (k + 1.0);
    return std::sqrt(pi) * gamma_fn(beta + 0.5) * ratio / (gamma_fn(beta) * (n + beta));
}

BiorthSystem gegenbauer_system(double beta) {
    if (!(beta > -0.5)) throw std::domain_error("gegenbauer_system: beta must exceed -1/2");
    BiorthSystem b;
    b.name = "gegenbauer";
    if (beta == 0.0) {
        b.P = [](int n, double t) { return Cx(chebyshev_t(n, t)); };
        b.S_closed = [](int n, double x) { return (n == 0 ? 1.0 : 2.0) * ipow(n) * bessel_j(n, x) / std::sqrt(2.0 * pi); };
    } else {
        b.P = [beta](int n, double t) { return Cx(gegenbauer(beta, n, t)); };
        b.S_closed = [beta](int n, double x) {
            return std::pow(2.0, beta - 0.5) / std::sqrt(pi) * ipow(n) * gamma_fn(beta) * (beta + n) * std::pow(x, n) *
                   bessel_j_scaled(beta + n, x);
        };
    }
    b.q = [beta, P = b.P](int n, double t) { return P(n, t) / gegenbauer_norm(beta, n); };
    b.weight = beta - 0.5;
    return b;
}

BiorthSystem dunkl_sampling_system(double alpha, int k_max) {
    auto zeros = std::make_shared<const ZeroTable>(bessel_zeros(alpha + 1.0, k_max));
    auto d = [alpha](double s) {
        if (s == 0.0) return std::exp(0.5 * (alpha + 1.0) * std::log(2.0) + 0.5 * lgamma_pos(alpha + 2.0));
        return std::exp(0.5 * alpha * std::log(2.0) + 0.5 * lgamma_pos(alpha + 1.0)) / std::abs(script_i_imag(alpha, s));
    };
    BiorthSystem b;
    b.name = "dunkl-sampling";
    b.P = [alpha, zeros, d](int n, double t) {
        const double s = zeros->signed_zero(n);
        return d(s) * dunkl_kernel(alpha, s * t);
    };
    b.q = b.P;
    b.signed_index = true;
    b.S_closed = [alpha, zeros, d](int n, double x) -> Cx {
        const double s = zeros->signed_zero(n);
        const double c = d(s) / (two_gamma(alpha) * (alpha + 1.0));
        const double ia = script_i_imag(alpha, s);
        if (x == s) {
            // limit of x I_{alpha+1}(ix) / (x - s) at a zero s of J_{alpha+1}
            return n == 0 ? c : c * ia * 2.0 * (alpha + 1.0) * ia;
        }
        return c * x * script_i_imag(alpha + 1.0, x) * ia / (x - s);
    };
    return b;
}

BiorthSystem neumann_system(const Params& p) {
    const GenGegenbauerFamily fam(p);
    BiorthSystem b;
    b.name = "neumann";
    b.P = [fam](int n, double t) { return Cx(fam(n, t)); };
    b.q = [fam](int n, double t) { return Cx(fam(n, t) / fam.norm(n)); };
    b.weight = p.beta;
    const double g = p.sum(), c = two_gamma(g);
    b.S_closed = [g, c](int n, double x) { return c * ipow(n) * (g + n + 1.0) * neumann_j(g, n, x); };
    return b;
}

Cx integrate_on(const KernelSystem& sys, double weight, const std::function<Cx(double)>& F, int order) {
    return sys.scale * integrate_interval(F, weighted(sys.alpha, weight), order);
}

Cx biorth_pair(const KernelSystem& sys, const BiorthSystem& bio, int n, int m, int order) {
    return integrate_on(sys, bio.weight, [&](double t) { return bio.P(n, t) * std::conj(bio.q(m, t)); }, order);
}

TruncatedSeries expand_kernel(const KernelSystem& sys, const BiorthSystem& bio, double x, int N, int order) {
    if (N < 1) throw std::domain_error("expand_kernel: N must be >= 1");
    TruncatedSeries s;
    s.N = N;
    s.first = bio.signed_index ? -N : 0;
    const int last = bio.signed_index ? N : N - 1;
    for (int n = s.first; n <= last; ++n)
        s.coeffs.push_back(
            integrate_on(sys, bio.weight, [&](double t) { return sys.kernel(x, t) * std::conj(bio.q(n, t)); }, order));
    for (int n : {s.first, last}) s.tail_estimate = std::max(s.tail_estimate, std::abs(s.at(n)));
    return s;
}

Cx kernel_partial_sum(const BiorthSystem& bio, const TruncatedSeries& s, double t) {
    Cx sum = 0.0;
    for (int n = s.first; n <= s.last(); ++n) sum += bio.P(n, t) * s.at(n);
    return sum;
}

Cx gegenbauer_planewave_partial_sum(double beta, double x, double t, int N) {
    if (N < 1) throw std::domain_error("planewave: N must be >= 1");
    if (beta == 0.0) {
        Cx sum = 0.0;
        for (int n = 0; n < N; ++n) sum += (n == 0 ? 1.0 : 2.0) * ipow(n) * bessel_j(n, x) * chebyshev_t(n, t);
        return sum;
    }
    const double pref = gamma_fn(beta) * std::pow(2.0, beta);
    Cx sum = 0.0;
    double c0 = 1.0, c1 = 2.0 * beta * t;
    for (int n = 0; n < N; ++n) {
        const double cn = n == 0 ? c0 : c1;
        sum += ipow(n) * (beta + n) * std::pow(x, n) * bessel_j_scaled(beta + n, x) * cn;
        if (n >= 1) {
            const double c2 = (2.0 * t * (n + beta) * c1 - (n + 2.0 * beta - 1.0) * c0) / (n + 1.0);
            c0 = c1;
            c1 = c2;
        }
    }
    return pref * sum;
}

Cx planewave_partial_sum(const Params& p, double x, double t, int N) {
    if (N < 1) throw std::domain_error("planewave: N must be >= 1");
    if (std::abs(t) > 1.0) throw std::domain_error("planewave: |t| must be <= 1");
    const double g = p.sum();
    const GenGegenbauerFamily fam(p);
    Cx sum = 0.0;
    for (int n = 0; n < N; ++n) sum += ipow(n) * (g + n + 1.0) * neumann_j(g, n, x) * fam(n, t);
    return two_gamma(g) * sum;
}

PWFunction::PWFunction(double alpha, std::function<double(double)> v, double weight)
    : alpha_(alpha), weight_(weight), v_(std::move(v)) {
    if (!(alpha > -1.0) || !(weight > -1.0)) throw std::domain_error("PWFunction: need alpha, weight > -1");
}

Cx PWFunction::operator()(double x) const {
    // the kernel oscillates like cos(xt); rounding keeps the rule cache small
    const int need = static_cast<int>(0.6 * std::abs(x)) + 40;
    const int order = std::max(120, 40 * ((need + 39) / 40));
    return integrate_interval([&](double t) { return v_(t) * dunkl_kernel(alpha_, x * t); }, weighted(alpha_, weight_),
                              order);
}

SamplingSeries::SamplingSeries(const PWFunction& f, int N)
    : alpha_(f.alpha()), N_(N), zeros_(bessel_zeros(f.alpha() + 1.0, std::max(N, 1))) {
    if (N < 1) throw std::domain_error("dunkl_sampling_sum: N must be >= 1");
    for (int n = -N; n <= N; ++n) {
        const double s = zeros_.signed_zero(n);
        samples_.push_back(f(s));
        scale_.push_back(n == 0 ? 0.0 : 1.0 / (2.0 * (alpha_ + 1.0) * script_i_imag(alpha_, s)));
    }
}

Cx SamplingSeries::operator()(double x) const {
    const double xi = x * script_i_imag(alpha_ + 1.0, x);
    Cx sum = sample(0) * script_i_imag(alpha_ + 1.0, x);
    // ascending |n| for a reproducible summation order
    for (int k = 1; k <= N_; ++k) {
        for (int n : {k, -k}) {
            const double s = zeros_.signed_zero(n);
            const std::size_t i = static_cast<std::size_t>(n + N_);
            sum += x == s ? samples_[i] : samples_[i] * (xi * scale_[i] / (x - s));
        }
    }
    return sum;
}

Cx dunkl_sampling_sum(const PWFunction& f, double x, int N) { return SamplingSeries(f, N)(x); }

double hankel_sampling_even(double alpha, const ZeroTable& s, const std::vector<double>& samples, double x) {
    const double i1 = script_i_imag(alpha + 1.0, x);
    double sum = samples.at(0) * i1;
    for (std::size_t n = 1; n < samples.size(); ++n) {
        const double sn = s[static_cast<int>(n)];
        sum += samples[n] * i1 / ((alpha + 1.0) * script_i_imag(alpha, sn)) * x * x / (x * x - sn * sn);
    }
    return sum;
}

double hankel_sampling_odd(double alpha, const ZeroTable& s, const std::vector<double>& samples, double x) {
    const double i1 = script_i_imag(alpha + 1.0, x);
    double sum = 0.0;
    for (std::size_t n = 1; n < samples.size(); ++n) {
        const double sn = s[static_cast<int>(n)];
        sum += samples[n] * i1 / ((alpha + 1.0) * script_i_imag(alpha, sn)) * x * sn / (x * x - sn * sn);
    }
    return sum;
}

TruncatedSeries fourier_neumann_coeffs(const Params& p, const PWFunction& f, int N, int order) {
    if (!(p.beta < 1.0)) throw std::domain_error("fourier_neumann_coeffs: needs beta < 1");
    if (f.alpha() != p.alpha) throw std::domain_error("fourier_neumann_coeffs: PW function has a different alpha");
    const double al = p.alpha, be = p.beta, g = p.sum();
    const auto rule = gauss_jacobi(order, al, f.weight());
    // int u(s) G_n(s) dmu_alpha(s), G_n(s) = int_R E_alpha(ist) J_{g,n}(t) dmu_g(t)
    // = (2^{a+1}Gamma(a+1) / 2^{g+1}Gamma(g+1)) |s|^{-a} int x^beta J_{g+n+1}(x) J_{a or a+1}(|s|x) dx
    const double ratio = two_gamma(al) / two_gamma(g);
    TruncatedSeries out;
    out.N = N;
    for (int n = 0; n < N; ++n) {
        const bool odd = n % 2 == 1;
        const Cx v = detail::weighted_sum(*rule, [&](double u) -> Cx {
            const double s = std::sqrt(u);
            const double inner = ratio * std::pow(s, -al) *
                                 integrate_bessel_product(-be, g + n + 1.0, odd ? al + 1.0 : al, s).value;
            const double vp = f.density(s), vm = f.density(-s);
            return odd ? Cx(0.0, 0.5 * inner * (vp - vm)) : Cx(0.5 * inner * (vp + vm));
        });
        out.coeffs.push_back(two_gamma(g) * v / detail::measure_normaliser(al));
    }
    out.tail_estimate = std::abs(out.coeffs.back());
    return out;
}

TruncatedSeries fourier_neumann_coeffs_density(const Params& p, const PWFunction& f, int N, int order) {
    const GenGegenbauerFamily fam(p);
    TruncatedSeries out;
    out.N = N;
    for (int n = 0; n < N; ++n) {
        const double c = integrate_interval([&](double t) { return f.density(t) * fam(n, t); },
                                            weighted(p.alpha, f.weight()), order);
        out.coeffs.push_back(two_gamma(p.sum()) * ipow(n) * c);
    }
    out.tail_estimate = std::abs(out.coeffs.back());
    return out;
}

Cx fourier_neumann_sum(const Params& p, const TruncatedSeries& a, double x) {
    const double g = p.sum();
    Cx sum = 0.0;
    for (int n = a.first; n <= a.last(); ++n) sum += a.at(n) * (g + n + 1.0) * neumann_j(g, n, x);
    return sum;
}

Cx dunkl_transform_neumann(const Params& p, int k, double t) {
    if (t == 0.0) throw std::domain_error("dunkl_transform_neumann: t must be nonzero");
    const double al = p.alpha, g = p.sum(), at = std::abs(t);
    if (k % 2 == 0) return std::pow(at, -al) * integrate_bessel_product(p.beta, g + k + 1.0, al, at).value;
    return Cx(0.0, -sgn(t)) * std::pow(at, -al) * integrate_bessel_product(p.beta, g + k + 1.0, al + 1.0, at).value;
}

Cx dunkl_transform_neumann_closed(const Params& p, int k, double t) {
    if (std::abs(t) > 1.0) return 0.0;
    const double g = p.sum();
    const GenGegenbauerFamily fam(p);
    const double qk = std::pow(1.0 - t * t, p.beta) * fam(k, t) / fam.norm(k);
    return ipow(-k) * qk / (two_gamma(g) * (g + k + 1.0));
}

BesselJacobiForm bessel_jacobi_minus(const Params& p, int n, double t) {
    if (n < 0) throw std::domain_error("bessel_jacobi_minus: n must be >= 0");
    if (!(t > 0.0) || t == 1.0) throw std::domain_error("bessel_jacobi_minus: needs t > 0, t != 1");
    const double al = p.alpha, be = p.beta;
    BesselJacobiForm r;
    r.quadrature = std::pow(t, -al) * integrate_bessel_product(be, p.sum() + 2.0 * n + 1.0, al, t).value;
    r.closed = t > 1.0 ? 0.0
                       : std::pow(2.0, -be) * std::exp(lgamma_pos(n + 1.0) - lgamma_pos(be + n + 1.0)) *
                             std::pow(1.0 - t * t, be) * JacobiFamily(al, be)(n, 1.0 - 2.0 * t * t);
    return r;
}

BesselJacobiForm bessel_jacobi_plus(const Params& p, int n, double t) {
    if (n < 0) throw std::domain_error("bessel_jacobi_plus: n must be >= 0");
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("bessel_jacobi_plus: needs 0 < t < 1");
    if (!(p.beta < 1.0)) throw std::domain_error("bessel_jacobi_plus: needs beta < 1");
    const double al = p.alpha, be = p.beta;
    BesselJacobiForm r;
    r.quadrature = std::pow(t, -al) * integrate_bessel_product(-be, p.sum() + 2.0 * n + 1.0, al, t).value;
    r.closed = std::pow(2.0, be) * std::exp(lgamma_pos(p.sum() + n + 1.0) - lgamma_pos(al + n + 1.0)) *
               JacobiFamily(al, be)(n, 1.0 - 2.0 * t * t);
    return r;
}

double neumann_inner(double a, int n, int m) {
    if ((n + m) % 2 == 1) return 0.0;
    return 2.0 / two_gamma(a) * integrate_bessel_product(1.0, a + n + 1.0, a + m + 1.0, 1.0).value;
}

Cx gegenbauer_st_pair(double beta, int n, int m, int order) {
    if (!(beta > 0.0)) throw std::domain_error("gegenbauer_st_pair: beta must be positive");
    // S_n(x) = c i^n x^{-beta} J_{beta+n}(x)
    const Cx c = std::pow(2.0, beta - 0.5) / std::sqrt(pi) * gamma_fn(beta) * (beta + n) * ipow(n);
    // int_R e^{-ixt} x^{-beta} J_{beta+n}(x) dx, through cos and sin written as J_{-1/2}, J_{1/2}
    auto inner = [&](double t) -> Cx {
        const double at = std::abs(t);
        const double r = 2.0 * std::sqrt(0.5 * pi * at) *
                         integrate_bessel_product(beta - 0.5, beta + n, n % 2 == 0 ? -0.5 : 0.5, at).value;
        if (n % 2 == 0) return r;
        return Cx(0.0, t < 0.0 ? r : -r);
    };
    // dt = sqrt(2 pi) dmu_{-1/2}, which cancels the kernel's 1/sqrt(2 pi)
    const double w = beta - 0.5;
    const Measure mw{Measure::Kind::mu_beta_alpha, -0.5, w};
    const auto sys = gegenbauer_system(beta);
    return c * integrate_interval([&](double t) { return sys.P(m, t) * inner(t) / std::pow(1.0 - t * t, w); }, mw, order);
}

double hankel_corollary_sum(const Params& p, double x, double t, int N) {
    if (!(x > 0.0)) throw std::domain_error("hankel_corollary_sum: x must be positive");
    const double al = p.alpha, be = p.beta, g = p.sum();
    const JacobiFamily jf(al, be);
    const double y = 1.0 - 2.0 * t * t;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) {
        const double c = std::pow(2.0, be + 1.0) * (g + 2.0 * n + 1.0) * std::exp(lgamma_pos(g + n + 1.0) - lgamma_pos(al + n + 1.0));
        sum += c * neumann_j(g, 2 * n, x) * jf(n, y);
    }
    return sum;
}

double kernel_norm_sq(double alpha, double x) {
    const double a = script_i_imag(alpha, x), b = script_i_imag(alpha + 1.0, x);
    return (x * x * b * b / (2.0 * (alpha + 1.0)) - (2.0 * alpha + 1.0) * a * b + 2.0 * (alpha + 1.0) * a * a) /
           (two_gamma(alpha) * (alpha + 1.0));
}

} // namespace biortho
