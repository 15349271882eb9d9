#pragma once

#include "biortho/simd.hpp"
#include "biortho/types.hpp"

#include <cmath>
#include <memory>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

namespace biortho {

// Gauss rule on [0,1] for the weight u^a (1-u)^b.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order;
    double a, b;
};

// Cached and immutable; safe to share between threads.
std::shared_ptr<const QuadRule> gauss_jacobi(int order, double a, double b);
std::shared_ptr<const QuadRule> gauss_legendre(int order);

struct Measure {
    enum class Kind { mu_alpha, mu_beta_alpha };
    Kind kind;
    double alpha;
    double beta = 0.0;

    static Measure mu(double alpha) { return {Kind::mu_alpha, alpha, 0.0}; }
    static Measure mu(const Params& p) { return {Kind::mu_beta_alpha, p.alpha, p.beta}; }

    double density(double t) const;
    // 2^{alpha+1} Gamma(alpha+1)
    double normaliser() const;
};

class NonFiniteSample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
double measure_normaliser(double alpha);

template <class T>
void check_finite(const T& v, double node) {
    if (!std::isfinite(std::real(v)) || !std::isfinite(std::imag(v)))
        throw NonFiniteSample("integrand not finite at t = " + std::to_string(node));
}

template <class F, class R = std::invoke_result_t<F, double>>
R weighted_sum(const QuadRule& rule, F&& g) {
    const std::size_t n = rule.nodes.size();
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        const R v = g(rule.nodes[i]);
        check_finite(v, rule.nodes[i]);
        re[i] = std::real(v);
        im[i] = std::imag(v);
    }
    const double sr = simd::dot(rule.weights.data(), re.data(), n);
    if constexpr (std::is_floating_point_v<R>) {
        return sr;
    } else {
        return R(sr, simd::dot(rule.weights.data(), im.data(), n));
    }
}
} // namespace detail

// int_{-1}^{1} f dmu. The integrand is folded to its even part and mapped by
// u = t^2 onto a Jacobi weight u^alpha (1-u)^beta; the odd part integrates to zero.
template <class F>
auto integrate_interval(F&& f, const Measure& m, int order = 120) {
    if (order < 8) throw std::domain_error("integrate_interval: order must be >= 8");
    const auto rule = gauss_jacobi(order, m.alpha, m.kind == Measure::Kind::mu_beta_alpha ? m.beta : 0.0);
    const double c = 1.0 / m.normaliser();
    return c * detail::weighted_sum(*rule, [&](double u) {
        const double t = std::sqrt(u);
        return 0.5 * (f(t) + f(-t));
    });
}

// int_{-L}^{L} f dmu_alpha over the line, for rapidly decaying f.
template <class F>
auto integrate_line(F&& f, double alpha, double L, int order = 120) {
    const auto rule = gauss_jacobi(order, 2.0 * alpha + 1.0, 0.0);
    const double c = std::pow(L, 2.0 * alpha + 2.0) / detail::measure_normaliser(alpha);
    return c * detail::weighted_sum(*rule, [&](double v) { return f(L * v) + f(-L * v); });
}

// int_a^b g(x) dx by composite Gauss-Legendre with the given number of panels.
template <class F>
auto integrate_panels(F&& g, double a, double b, int panels, int order = 20) {
    const auto rule = gauss_legendre(order);
    using R = std::invoke_result_t<F, double>;
    R total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        total += h * detail::weighted_sum(*rule, [&](double u) { return g(lo + h * u); });
    }
    return total;
}

struct OscResult {
    double value = 0.0;
    double tail = 0.0;   // contribution of the asymptotic tail
    int cells = 0;
    bool converged = false;
    double last = 0.0, previous = 0.0; // last two partial sums when acceleration is used
};

class AccelerationFailure : public std::runtime_error {
public:
    AccelerationFailure(const std::string& msg, double last_, double prev_)
        : std::runtime_error(msg), last(last_), previous(prev_) {}
    double last, previous;
};

// int_0^inf x^{-lam} J_mu(x) J_nu(x t) dx.
// Cells end at successive zeros of the faster factor up to a cutoff where both
// Hankel expansions are accurate; beyond it the product expansion is integrated
// term by term. t = 1 is allowed when lam > 0.
OscResult integrate_bessel_product(double lam, double mu, double nu, double t);

// The same integral from accelerated partial sums over zero-to-zero cells
// (iterated Aitken). Throws AccelerationFailure after max_cells.
OscResult integrate_bessel_product_accelerated(double lam, double mu, double nu, double t, int max_cells = 400,
                                               int depth = 6);

// int_A^inf x^{-s} e^{i w x} dx for s > 0 (s > 1 when w = 0).
Cx oscillatory_power_tail(double s, double w, double A);

} // namespace biortho
