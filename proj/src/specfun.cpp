#include "biortho/specfun.hpp"

#include <boost/math/tools/roots.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace biortho {

namespace {

constexpr int series_cap = 500;
constexpr double series_rel = 1e-18;

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double lanczos_sum(double z) {
    double a = lanczos_p[0];
    for (std::size_t i = 1; i < lanczos_p.size(); ++i) a += lanczos_p[i] / (z + static_cast<double>(i));
    return a;
}

// 2^nu Gamma(nu+1), the J_nu(x)/x^nu normaliser.
double scale_factor(double nu) { return std::exp(nu * std::log(2.0) + lgamma_pos(nu + 1.0)); }

} // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at nonpositive integer");
    if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double lgamma_pos(double x) {
    if (!(x > 0.0)) throw std::domain_error("lgamma_pos: argument must be positive");
    if (x < 0.5) return std::log(pi / std::sin(pi * x)) - lgamma_pos(1.0 - x);
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double pochhammer(double a, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= a + k;
    return r;
}

double bessel_j_series(double nu, double x) {
    const double y = -0.25 * x * x;
    double term = 1.0 / scale_factor(nu);
    double sum = term;
    for (int k = 1; k <= series_cap; ++k) {
        term *= y / (k * (nu + k));
        sum += term;
        if (std::abs(term) <= series_rel * std::abs(sum)) return sum;
        if (term == 0.0) return sum;
    }
    throw std::runtime_error("bessel_j_series: term cap reached");
}

double bessel_j_miller(double nu, double x) {
    x = std::abs(x);
    if (x == 0.0) return 1.0 / scale_factor(nu);
    const int top = static_cast<int>(std::max(x, nu) + 25.0 + 6.0 * std::cbrt(std::max(x, 1.0)));
    const int n_start = top + (top % 2);

    // g_j = Gamma(nu+j) / (j! Gamma(nu+1)), weights of the normalisation sum
    // (x/2)^nu = sum_j (nu+2j) Gamma(nu+j)/j! J_{nu+2j}(x).
    std::vector<double> g(static_cast<std::size_t>(n_start / 2 + 2), 0.0);
    g[1] = 1.0;
    for (std::size_t j = 2; j < g.size(); ++j) g[j] = g[j - 1] * (nu + static_cast<double>(j) - 1.0) / static_cast<double>(j);

    double f_next = 0.0, f = 1e-30, norm = 0.0;
    for (int k = n_start; k >= 1; --k) {
        if (k % 2 == 0) norm += (nu + k) * g[static_cast<std::size_t>(k / 2)] * f;
        const double f_prev = 2.0 * (nu + k) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if (std::abs(f) > 1e250) {
            f *= 1e-250;
            f_next *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += f;
    return f / (scale_factor(nu) * norm);
}

bool bessel_j_asymptotic(double nu, double x, double& out) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, p = 1.0, q = 0.0, prev = 1.0;
    bool converged = false;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 1) q += signed_term;
        else p += signed_term;
        const double mag = std::abs(term);
        if (mag < 1e-17) {
            converged = true;
            break;
        }
        if (k > 2 && mag > prev) break;
        prev = mag;
    }
    if (!converged) return false;
    const double chi = x - (0.5 * nu + 0.25) * pi;
    out = std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
    return true;
}

double bessel_j_scaled(double nu, double x) {
    if (!(nu > -1.0)) throw std::domain_error("bessel_j: order must exceed -1");
    const double ax = std::abs(x);
    if (ax <= 5.0 || ax * ax <= 4.0 * (nu + 1.0)) return bessel_j_series(nu, ax);
    double v;
    if (ax > 30.0 && bessel_j_asymptotic(nu, ax, v)) return v / std::pow(ax, nu);
    return bessel_j_miller(nu, ax);
}

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw std::domain_error("bessel_j: order must exceed -1");
    if (x < 0.0) {
        if (nu != std::floor(nu)) throw std::domain_error("bessel_j: negative argument needs integer order");
        const double v = bessel_j(nu, -x);
        return (static_cast<std::int64_t>(nu) % 2 == 0) ? v : -v;
    }
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double s = bessel_j_scaled(nu, x);
    return s * std::pow(x, nu);
}

Cx script_i(double alpha, Cx z) {
    if (!(alpha > -1.0)) throw std::domain_error("script_i: alpha must exceed -1");
    const Cx y = 0.25 * z * z;
    Cx term = 1.0, sum = 1.0;
    for (int n = 1; n <= series_cap; ++n) {
        term *= y / (n * (alpha + n));
        sum += term;
        if (std::abs(term) <= series_rel * std::abs(sum) || term == 0.0) return sum;
    }
    throw std::runtime_error("script_i: term cap reached");
}

double script_i_imag(double alpha, double x) {
    if (!(alpha > -1.0)) throw std::domain_error("script_i: alpha must exceed -1");
    return scale_factor(alpha) * bessel_j_scaled(alpha, x);
}

Cx dunkl_kernel(double alpha, double x) {
    return {script_i_imag(alpha, x), x * script_i_imag(alpha + 1.0, x) / (2.0 * (alpha + 1.0))};
}

Cx dunkl_kernel(double alpha, Cx z) {
    return script_i(alpha, z) + z / (2.0 * (alpha + 1.0)) * script_i(alpha + 1.0, z);
}

double ZeroTable::signed_zero(int n) const {
    if (n == 0) return 0.0;
    return n > 0 ? (*this)[n] : -(*this)[-n];
}

ZeroTable bessel_zeros(double nu, int k_max) {
    if (k_max < 1) throw std::domain_error("bessel_zeros: k_max must be >= 1");
    if (!(nu > -1.0)) throw std::domain_error("bessel_zeros: order must exceed -1");
    ZeroTable table{nu, {}};
    table.zeros.reserve(static_cast<std::size_t>(k_max));
    const auto f = [nu](double x) { return bessel_j_scaled(nu, x); };
    const double step = 0.2;
    double a = 1e-3, fa = f(a);
    int guard = 0;
    while (table.size() < k_max) {
        const double b = a + step;
        const double fb = f(b);
        if (fb == 0.0) {
            table.zeros.push_back(b);
        } else if ((fa < 0.0) != (fb < 0.0)) {
            std::uintmax_t iters = 200;
            auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb,
                                                       boost::math::tools::eps_tolerance<double>(52), iters);
            if (iters >= 200) throw std::runtime_error("bessel_zeros: bracket refinement did not converge");
            table.zeros.push_back(0.5 * (r.first + r.second));
        }
        a = b;
        fa = fb;
        if (++guard > 100000 + 20 * k_max) throw std::runtime_error("bessel_zeros: scan exceeded iteration cap");
    }
    return table;
}

double lommel(int n, double a, double z) {
    if (z == 0.0) throw std::domain_error("lommel: z must be nonzero");
    return modified_lommel(n, a, 1.0 / z);
}

double modified_lommel(int n, double a, double w) { return modified_lommel(n, a, Cx(w, 0.0)).real(); }

Cx modified_lommel(int n, double a, Cx w) {
    if (n < -1) throw std::domain_error("lommel: n must be >= -1");
    if (n == -1) return 0.0;
    Cx prev = 0.0, cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const Cx next = 2.0 * (k + a) * w * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace biortho
