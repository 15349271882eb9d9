#include "biortho/quad.hpp"

#include "biortho/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace biortho {

namespace {

// P_n^{(A,B)} and P_{n-1}^{(A,B)} at y.
void jacobi_pair(int n, double A, double B, double y, double& pn, double& pm) {
    double p0 = 1.0;
    double p1 = (A + 1.0) + 0.5 * (A + B + 2.0) * (y - 1.0);
    if (n == 1) {
        pn = p1;
        pm = p0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * k + A + B;
        const double a1 = 2.0 * k * (k + A + B) * (c - 2.0);
        const double a2 = (c - 1.0) * (A * A - B * B);
        const double a3 = (c - 2.0) * (c - 1.0) * c;
        const double a4 = 2.0 * (k + A - 1.0) * (k + B - 1.0) * c;
        const double p2 = ((a2 + a3 * y) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pm = p0;
}

double jacobi_derivative(int n, double A, double B, double y, double pn, double pm) {
    const double c = 2.0 * n + A + B;
    return (n * ((A - B) - c * y) * pn + 2.0 * (n + A) * (n + B) * pm) / (c * (1.0 - y) * (1.0 + y));
}

QuadRule build_gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw std::domain_error("gauss_jacobi: order must be >= 1");
    if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("gauss_jacobi: weight exponents must exceed -1");
    // Nodes on [-1,1] for (1-y)^A (1+y)^B with A = b, B = a, then u = (1+y)/2.
    const double A = b, B = a;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = pi * (k + 1 + 0.5 * A - 0.25) / (n + 0.5 * (A + B + 1.0));
        double z = std::cos(theta);
        for (int it = 0; it < 100; ++it) {
            double pn, pm;
            jacobi_pair(n, A, B, z, pn, pm);
            const double dp = jacobi_derivative(n, A, B, z, pn, pm);
            double defl = 0.0;
            for (int j = 0; j < k; ++j) defl += 1.0 / (z - y[static_cast<std::size_t>(j)]);
            const double step = pn / (dp - pn * defl);
            z -= step;
            z = std::clamp(z, -1.0 + 1e-15, 1.0 - 1e-15);
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        y[static_cast<std::size_t>(k)] = z;
    }
    std::sort(y.begin(), y.end());
    for (std::size_t k = 1; k < y.size(); ++k)
        if (!(y[k] > y[k - 1])) throw std::runtime_error("gauss_jacobi: Newton iteration produced coincident nodes");

    const double log_c = lgamma_pos(n + A + 1.0) + lgamma_pos(n + B + 1.0) - lgamma_pos(n + A + B + 1.0) -
                         lgamma_pos(n + 1.0);
    QuadRule r{{}, {}, n, a, b};
    r.nodes.resize(y.size());
    r.weights.resize(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        double pn, pm;
        jacobi_pair(n, A, B, y[k], pn, pm);
        const double dp = jacobi_derivative(n, A, B, y[k], pn, pm);
        // 2^{A+B+1} from the Jacobi weight cancels against the Jacobian of u = (1+y)/2.
        r.weights[k] = std::exp(log_c) / ((1.0 - y[k]) * (1.0 + y[k]) * dp * dp);
        r.nodes[k] = 0.5 * (1.0 + y[k]);
    }
    return r;
}

} // namespace

std::shared_ptr<const QuadRule> gauss_jacobi(int order, double a, double b) {
    static std::mutex mtx;
    static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadRule>> cache;
    const auto key = std::make_tuple(order, a, b);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadRule>(build_gauss_jacobi(order, a, b));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, rule).first->second;
}

std::shared_ptr<const QuadRule> gauss_legendre(int order) { return gauss_jacobi(order, 0.0, 0.0); }

double detail::measure_normaliser(double alpha) { return std::exp((alpha + 1.0) * std::log(2.0) + lgamma_pos(alpha + 1.0)); }

double Measure::normaliser() const { return detail::measure_normaliser(alpha); }

double Measure::density(double t) const {
    double d = std::pow(std::abs(t), 2.0 * alpha + 1.0) / normaliser();
    if (kind == Kind::mu_beta_alpha) d *= std::pow(1.0 - t * t, beta);
    return d;
}

// ---------------------------------------------------------------------------
// Oscillatory Bessel products

Cx oscillatory_power_tail(double s, double w, double A) {
    if (w == 0.0) {
        if (!(s > 1.0)) throw std::domain_error("oscillatory_power_tail: divergent non-oscillatory tail");
        return std::pow(A, 1.0 - s) / (s - 1.0);
    }
    if (w < 0.0) return std::conj(oscillatory_power_tail(s, -w, A));
    const double wa = w * A;
    if (wa >= 30.0) {
        const Cx ratio = Cx(0.0, -1.0) / wa;
        Cx term = 1.0, sum = 1.0;
        double prev = 1.0;
        for (int j = 0; j < 200; ++j) {
            term *= (s + j) * ratio;
            const double mag = std::abs(term);
            if (mag > prev) break;
            sum += term;
            prev = mag;
            if (mag < 1e-17) break;
        }
        return Cx(0.0, 1.0) / w * std::exp(Cx(0.0, wa)) * std::pow(A, -s) * sum;
    }
    // Substitute y = w x and integrate [wA, 30] on geometrically graded panels.
    const double y0 = wa, y1 = 30.0;
    Cx inner = 0.0;
    double lo = y0;
    while (lo < y1) {
        const double hi = std::min(y1, std::max(2.0 * lo, lo + 1.0));
        inner += integrate_panels([s](double y) { return std::pow(y, -s) * std::exp(Cx(0.0, y)); }, lo, hi,
                                  std::max(1, static_cast<int>(std::ceil((hi - lo) / 2.0))), 20);
        lo = hi;
    }
    inner += oscillatory_power_tail(s, 1.0, y1);
    return std::pow(w, s - 1.0) * inner;
}

namespace {

void check_window(double lam, double mu, double nu, double t) {
    if (!(t > 0.0)) throw std::domain_error("integrate_bessel_product: t must be positive");
    if (!(mu + nu - lam > -1.0)) throw std::domain_error("integrate_bessel_product: divergent at the origin");
    if (t == 1.0 && !(lam > 0.0)) throw std::domain_error("integrate_bessel_product: t = 1 needs lam > 0");
    if (!(lam > -1.0)) throw std::domain_error("integrate_bessel_product: divergent at infinity");
}

struct CellPlan {
    double order, scale; // faster factor is J_order(scale * x)
};

CellPlan faster_factor(double mu, double nu, double t) { return t <= 1.0 ? CellPlan{mu, 1.0} : CellPlan{nu, t}; }

std::shared_ptr<const ZeroTable> cached_zeros(double nu, int k) {
    static std::mutex mtx;
    static std::map<double, std::shared_ptr<const ZeroTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[nu];
    if (!slot || slot->size() < k) {
        const int grow = std::max(k, slot ? 2 * slot->size() : k);
        slot = std::make_shared<const ZeroTable>(bessel_zeros(nu, grow));
    }
    return slot;
}

// Integral over [0, z1]; the integrand is x^p times a smooth factor.
double first_cell(double lam, double mu, double nu, double t, double z1) {
    const double p = mu + nu - lam;
    const auto rule = gauss_jacobi(40, p, 0.0);
    const double tn = std::pow(t, nu);
    const double v = detail::weighted_sum(*rule, [&](double u) {
        const double x = z1 * u;
        return bessel_j_scaled(mu, x) * bessel_j_scaled(nu, x * t) * tn;
    });
    return std::pow(z1, p + 1.0) * v;
}

double cell(double lam, double mu, double nu, double t, double a, double b) {
    return integrate_panels(
        [&](double x) { return std::pow(x, -lam) * bessel_j(mu, x) * bessel_j(nu, x * t); }, a, b, 1, 24);
}

std::vector<double> hankel_coeffs(double order, int count) {
    std::vector<double> a(static_cast<std::size_t>(count));
    const double m = 4.0 * order * order;
    a[0] = 1.0;
    for (int k = 1; k < count; ++k) {
        const double odd = 2.0 * k - 1.0;
        a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] * (m - odd * odd) / (8.0 * k);
    }
    return a;
}

// Term-wise integral of the Hankel product expansion over [A, inf).
double asymptotic_tail(double lam, double mu, double nu, double t, double A) {
    constexpr int terms = 24;
    const auto am = hankel_coeffs(mu, terms), an = hankel_coeffs(nu, terms);
    const double phi_mu = (0.5 * mu + 0.25) * pi, phi_nu = (0.5 * nu + 0.25) * pi;
    Cx sum_plus = 0.0, sum_minus = 0.0;
    double first = 0.0;
    for (int m = 0; m < terms; ++m) {
        Cx c = 0.0, d = 0.0;
        for (int k = 0; k <= m; ++k) {
            const int l = m - k;
            const double w = am[static_cast<std::size_t>(k)] * an[static_cast<std::size_t>(l)] * std::pow(t, -l);
            c += ipow(k + l) * w;
            d += ipow(k - l) * w;
        }
        const double size = (std::abs(c) + std::abs(d)) * std::pow(A, -m);
        if (m == 0) first = size;
        else if (size < 1e-17 * first) break;
        const double s = lam + 1.0 + m;
        sum_plus += c * oscillatory_power_tail(s, 1.0 + t, A);
        sum_minus += d * oscillatory_power_tail(s, 1.0 - t, A);
    }
    const Cx total = std::exp(Cx(0.0, -(phi_mu + phi_nu))) * sum_plus + std::exp(Cx(0.0, -(phi_mu - phi_nu))) * sum_minus;
    return total.real() / (pi * std::sqrt(t));
}

} // namespace

OscResult integrate_bessel_product(double lam, double mu, double nu, double t) {
    check_window(lam, mu, nu, t);
    const CellPlan plan = faster_factor(mu, nu, t);
    const double cutoff = std::max(40.0 + 2.0 * mu * mu, (40.0 + 2.0 * nu * nu) / t);
    const int need = static_cast<int>(cutoff * plan.scale / pi) + 4;
    const auto zt_ptr = cached_zeros(plan.order, need);
    const ZeroTable& zt = *zt_ptr;

    OscResult r;
    double a = zt[1] / plan.scale;
    double sum = first_cell(lam, mu, nu, t, a);
    r.cells = 1;
    for (int k = 2; a < cutoff; ++k) {
        const double b = zt[k] / plan.scale;
        sum += cell(lam, mu, nu, t, a, b);
        a = b;
        ++r.cells;
    }
    r.tail = asymptotic_tail(lam, mu, nu, t, a);
    r.value = sum + r.tail;
    r.converged = true;
    return r;
}

OscResult integrate_bessel_product_accelerated(double lam, double mu, double nu, double t, int max_cells, int depth) {
    check_window(lam, mu, nu, t);
    const CellPlan plan = faster_factor(mu, nu, t);
    const auto zt_ptr = cached_zeros(plan.order, max_cells + 1);
    const ZeroTable& zt = *zt_ptr;

    std::vector<double> partial;
    double a = zt[1] / plan.scale;
    double sum = first_cell(lam, mu, nu, t, a);
    partial.push_back(sum);
    const std::size_t window = static_cast<std::size_t>(2 * depth + 1);
    double prev_est = 0.0;
    bool have_prev = false;
    int stable = 0;
    for (int k = 2; k <= max_cells; ++k) {
        const double b = zt[k] / plan.scale;
        sum += cell(lam, mu, nu, t, a, b);
        a = b;
        partial.push_back(sum);
        if (partial.size() < window) continue;
        std::vector<double> s(partial.end() - static_cast<std::ptrdiff_t>(window), partial.end());
        for (int level = 0; level < depth && s.size() >= 3; ++level) {
            std::vector<double> next;
            for (std::size_t i = 0; i + 2 < s.size(); ++i) {
                const double d1 = s[i + 1] - s[i], d2 = s[i + 2] - 2.0 * s[i + 1] + s[i];
                next.push_back(d2 == 0.0 ? s[i + 2] : s[i] - d1 * d1 / d2);
            }
            s.swap(next);
        }
        const double est = s.back();
        if (have_prev && std::abs(est - prev_est) <= 1e-8 * std::abs(est)) {
            if (++stable >= 3) {
                OscResult r;
                r.value = est;
                r.cells = k;
                r.converged = true;
                r.last = partial.back();
                r.previous = partial[partial.size() - 2];
                return r;
            }
        } else {
            stable = 0;
        }
        prev_est = est;
        have_prev = true;
    }
    throw AccelerationFailure("integrate_bessel_product_accelerated: no convergence within cell cap", partial.back(),
                              partial[partial.size() - 2]);
}

} // namespace biortho
