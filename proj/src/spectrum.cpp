#include "biortho/spectrum.hpp"

#include "biortho/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace biortho {

SpectralProblem::SpectralProblem(Params p, int N_, int k_max)
    : params(p), N(N_), zeros(bessel_zeros(p.sum() + 1.0, std::max(k_max, 1))) {
    if (N < 10) throw std::domain_error("SpectralProblem: N must be >= 10");
}

double SpectralProblem::j(int k) const {
    if (k < 1) throw std::domain_error("SpectralProblem: k must be >= 1");
    if (k > zeros.size())
        throw std::out_of_range("SpectralProblem: zero table holds " + std::to_string(zeros.size()) + " zeros, k = " +
                                std::to_string(k));
    return zeros[k];
}

std::vector<Cx> to_raised(const Params& p, const CoeffVector& a) {
    const int N = a.size();
    std::vector<Cx> r(static_cast<std::size_t>(N + 1));
    for (int m = 0; m <= N; ++m) r[static_cast<std::size_t>(m)] = gengeg_lowering(p, m) * a.at(m) - gengeg_lowering(p, m + 2) * a.at(m + 2);
    return r;
}

TResult apply_T_raised(const SpectralProblem& sp, const std::vector<Cx>& g) {
    const double c = 1.0 / (2.0 * (sp.gamma() + 1.0));
    const int N = sp.N;
    TResult res;
    res.out.a.assign(static_cast<std::size_t>(N), 0.0);
    for (std::size_t m = 0; m < g.size(); ++m) {
        const int n = static_cast<int>(m) + 1;
        if (n <= N) {
            res.out.a[m] = c * g[m];
        } else {
            const double h = GenGegenbauerFamily(sp.params).norm(n);
            res.dropped = std::hypot(res.dropped, std::abs(c * g[m]) * std::sqrt(h));
        }
    }
    return res;
}

TResult apply_T(const SpectralProblem& sp, const CoeffVector& g) { return apply_T_raised(sp, to_raised(sp.params, g)); }

double T_kernel(const Params& p, double t, double r, int terms) {
    const GenGegenbauerFamily low(p), up(p.raised());
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) sum += low(n, t) * up(n - 1, r) / up.norm(n - 1);
    return sum / (2.0 * (p.sum() + 1.0));
}

Poly to_poly(const Params& p, const CoeffVector& a) {
    const GenGegenbauerFamily fam(p);
    Poly out{{0.0}};
    for (int n = 1; n <= a.size(); ++n) out = out + fam.poly(n) * a.at(n).real();
    return out;
}

Cx evaluate(const Params& p, const CoeffVector& a, double t) {
    const GenGegenbauerFamily fam(p);
    Cx sum = 0.0;
    for (int n = 1; n <= a.size(); ++n) sum += a.at(n) * fam(n, t);
    return sum;
}

CoeffVector recurrence_coeffs(const SpectralProblem& sp, Cx lam, Cx a1, int N) {
    if (lam == Cx(0.0)) throw std::domain_error("recurrence_coeffs: lambda must be nonzero");
    if (N < 1) throw std::domain_error("recurrence_coeffs: N must be >= 1");
    const double g = sp.gamma();
    CoeffVector out;
    out.a.push_back(a1);
    if (N >= 2) out.a.push_back(-2.0 * lam * (g + 3.0) * a1);
    for (int n = 2; n < N; ++n)
        out.a.push_back((g + n + 2.0) * (out.at(n - 1) / (g + n) - 2.0 * lam * out.at(n)));
    return out;
}

CoeffVector minimal_coeffs(const SpectralProblem& sp, Cx lam, int N) {
    if (lam == Cx(0.0)) throw std::domain_error("minimal_coeffs: lambda must be nonzero");
    const double g = sp.gamma();
    // past n ~ 1/|lam| the minimal solution decays factorially
    const int M = N + 60 + 2 * static_cast<int>(1.0 / std::abs(lam));
    // ratios r_n = a_n / a_{n-1} from 1/r_n = (g+n)(r_{n+1}/(g+n+2) + 2 lam)
    std::vector<Cx> r(static_cast<std::size_t>(M + 2), 0.0);
    for (int n = M; n >= 2; --n) r[static_cast<std::size_t>(n)] = 1.0 / ((g + n) * (r[static_cast<std::size_t>(n + 1)] / (g + n + 2.0) + 2.0 * lam));
    CoeffVector out;
    out.a.push_back(1.0);
    for (int n = 2; n <= N; ++n) out.a.push_back(out.a.back() * r[static_cast<std::size_t>(n)]);
    return out;
}

CoeffVector eigen_coeffs_bessel(const SpectralProblem& sp, int k, int sign, int N) {
    const double g = sp.gamma(), j = sp.j(k);
    const double jg = bessel_j(g, j);
    const Cx w(0.0, sign > 0 ? -1.0 : 1.0); // -+i
    CoeffVector out;
    Cx pw = 1.0;
    for (int n = 1; n <= N; ++n) {
        out.a.push_back(-pw * (g + n + 1.0) * bessel_j(g + n + 1.0, j) / ((g + 2.0) * jg));
        pw *= w;
    }
    return out;
}

Cx eigenvalue(const SpectralProblem& sp, int k, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("eigenvalue: sign must be +1 or -1");
    return Cx(0.0, sign / sp.j(k));
}

std::vector<Cx> eigenvalues(const SpectralProblem& sp, int k_max) {
    if (k_max < 1) throw std::domain_error("eigenvalues: k_max must be >= 1");
    std::vector<Cx> out;
    for (int k = 1; k <= k_max; ++k) {
        out.push_back(eigenvalue(sp, k, 1));
        out.push_back(eigenvalue(sp, k, -1));
    }
    return out;
}

EigenfunctionValue eigenfunction(const SpectralProblem& sp, int k, int sign, double t, int N) {
    if (std::abs(t) > 1.0) throw std::domain_error("eigenfunction: |t| must be <= 1");
    const Params& p = sp.params;
    const double g = sp.gamma(), j = sp.j(k);
    const CoeffVector a = minimal_coeffs(sp, eigenvalue(sp, k, sign), N + 1);
    EigenfunctionValue v;
    CoeffVector head;
    head.a.assign(a.a.begin(), a.a.end() - 1);
    v.series = evaluate(p, head, t);
    v.tail = std::abs(a.at(N + 1) * GenGegenbauerFamily(p)(N + 1, t));
    const double s = sign > 0 ? 1.0 : -1.0;
    v.closed = Cx(0.0, -s) * std::pow(0.5 * j, g + 1.0) * dunkl_kernel(p.alpha, -s * t * j) /
               (gamma_fn(g + 1.0) * (g + 2.0) * bessel_j(g, j));
    return v;
}

namespace {

double raised_norm(const Params& p, const std::vector<Cx>& r) {
    const GenGegenbauerFamily up(p.raised());
    double s = 0.0;
    for (std::size_t m = 0; m < r.size(); ++m) s += std::norm(r[m]) * up.norm(static_cast<int>(m));
    return std::sqrt(s);
}

} // namespace

double residual_for(const SpectralProblem& sp, Cx lam, const CoeffVector& a) {
    const SpectralProblem win(sp.params, std::max(a.size(), 10), 1);
    const TResult Tg = apply_T(win, a);
    CoeffVector d;
    for (int n = 1; n <= a.size(); ++n) d.a.push_back(Tg.out.at(n) - lam * a.at(n));
    return raised_norm(sp.params, to_raised(sp.params, d)) / (std::abs(lam) * raised_norm(sp.params, to_raised(sp.params, a)));
}

double eigen_residual(const SpectralProblem& sp, int k, int sign, int N) {
    const Cx lam = eigenvalue(sp, k, sign);
    return residual_for(sp, lam, minimal_coeffs(sp, lam, N));
}

double jh_residual(const SpectralProblem& sp, int k, int n) {
    if (n < 1) throw std::domain_error("jh_residual: n must be >= 1");
    const double g = sp.gamma(), j = sp.j(k);
    const double jg = bessel_j(g, j);
    return std::abs(bessel_j(g + n + 1.0, j) + modified_lommel(n - 1, g + 2.0, 1.0 / j) * jg) / std::abs(jg);
}

double summability(const Params& p, const CoeffVector& a) {
    double s = 0.0;
    for (int n = 1; n <= a.size(); ++n) s += std::norm(a.at(n)) * std::pow(n, 2.0 * p.beta - 1.0);
    return s;
}

double h_ratio(const Params& p, int n) {
    if (n < 0) throw std::domain_error("h_ratio: n must be >= 0");
    const double al = p.alpha, be = p.beta, g = p.sum();
    if (n % 2 == 0) {
        const int k = n / 2;
        return (g + 1.0) * (g + 1.0) / ((be + k + 1.0) * (al + k + 1.0));
    }
    const int k = (n + 1) / 2;
    return (g + 1.0) * (g + 1.0) / (k * (g + k + 1.0));
}

double boundedness_constant(const Params& p) {
    // both closed-form branches decrease in k
    return std::sqrt(std::max(h_ratio(p, 0), h_ratio(p, 1))) / (2.0 * (p.sum() + 1.0));
}

double orthocomplement_inner(const Params& p, int n, int order) {
    if (!(p.beta > 0.0)) throw std::domain_error("orthocomplement_inner: needs beta > 0");
    const GenGegenbauerFamily fam(p);
    return integrate_interval([&](double t) { return fam(n, t); }, Measure::mu(p), order);
}

} // namespace biortho
