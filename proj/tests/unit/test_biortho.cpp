#include "biortho/biortho.hpp"
#include "biortho/orthopoly.hpp"
#include "biortho/quad.hpp"
#include "biortho/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace biortho;

namespace {

// 2^{a+1} Gamma(a+1)
double tg(double a) { return std::pow(2.0, a + 1.0) * std::tgamma(a + 1.0); }

} // namespace

TEST_CASE("neumann function parity and value at zero") {
    for (int n : {0, 1, 2, 5})
        for (double x : {0.3, 2.2, 9.0})
            CHECK(neumann_j(0.7, n, -x) == doctest::Approx(std::pow(-1.0, n) * neumann_j(0.7, n, x)).epsilon(1e-14));
    CHECK(neumann_j(0.7, 0, 0.0) == doctest::Approx(1.0 / (std::pow(2.0, 1.7) * std::tgamma(2.7))).epsilon(1e-13));
    CHECK(neumann_j(0.7, 2, 0.0) == 0.0);
}

TEST_CASE("fourier system") {
    const auto sys = fourier_system();
    const auto bio = fourier_exponentials();
    CHECK(bio.S_closed(3, 3 * pi).real() == doctest::Approx(1.0 / std::sqrt(pi)).epsilon(1e-15));
    const double kn = integrate_on(sys, 0.0, [&](double t) { return std::norm(sys.kernel(1.7, t)); }).real();
    CHECK(kn == doctest::Approx(1.0 / pi).epsilon(1e-13));
    // Parseval: sum |S_n(x)|^2 = int |K(x,.)|^2
    double parseval = 0.0;
    for (int n = -4000; n <= 4000; ++n) parseval += std::norm(bio.S_closed(n, 1.7));
    CHECK(parseval == doctest::Approx(1.0 / pi).epsilon(1e-4));
    const auto s = expand_kernel(sys, bio, 1.3, 5);
    for (int n = -5; n <= 5; ++n) CHECK(std::abs(s.at(n) - bio.S_closed(n, 1.3)) < 1e-13);
}

TEST_CASE("kernel expansions match closed forms") {
    SUBCASE("gegenbauer") {
        for (double beta : {0.0, 0.4, 1.0}) {
            const auto bio = gegenbauer_system(beta);
            const auto s = expand_kernel(fourier_system(), bio, 3.1, 8);
            for (int n = 0; n < 8; ++n) CHECK(std::abs(s.at(n) - bio.S_closed(n, 3.1)) < 1e-10);
            const Cx recon = kernel_partial_sum(bio, expand_kernel(fourier_system(), bio, 3.1, 30), 0.45);
            CHECK(std::abs(recon - fourier_system().kernel(3.1, 0.45)) < 1e-12);
        }
    }
    SUBCASE("dunkl sampling") {
        const double alpha = 0.5;
        const auto bio = dunkl_sampling_system(alpha, 8);
        const auto s = expand_kernel(dunkl_system(alpha), bio, 1.3, 2);
        for (int n = -2; n <= 2; ++n) CHECK(std::abs(s.at(n) - bio.S_closed(n, 1.3)) < 1e-8);
        // at a node the closed form collapses to its limit
        const double s1 = bessel_zeros(alpha + 1.0, 1)[1];
        const auto sn = expand_kernel(dunkl_system(alpha), bio, s1, 1);
        CHECK(std::abs(sn.at(1) - bio.S_closed(1, s1)) < 1e-8);
        CHECK(std::abs(sn.at(0) - bio.S_closed(0, s1)) < 1e-8);
    }
    SUBCASE("neumann") {
        const Params p(0.3, 0.2);
        const auto bio = neumann_system(p);
        for (double x : {0.4, 2.0, 7.5}) {
            const auto s = expand_kernel(dunkl_system(p.alpha), bio, x, 8);
            for (int n = 0; n < 8; ++n) CHECK(std::abs(s.at(n) - bio.S_closed(n, x)) < 1e-10);
        }
    }
}

TEST_CASE("biorthogonality gram matrices") {
    const Params p(0.3, 0.2);
    const auto sys = dunkl_system(p.alpha);
    const auto bio = neumann_system(p);
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= 8; ++m)
            worst = std::max(worst, std::abs(biorth_pair(sys, bio, n, m) - (n == m ? 1.0 : 0.0)));
    CHECK(worst < 1e-10);

    const auto ds = dunkl_sampling_system(0.5, 6);
    worst = 0.0;
    for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            worst = std::max(worst, std::abs(biorth_pair(dunkl_system(0.5), ds, n, m) - (n == m ? 1.0 : 0.0)));
    CHECK(worst < 1e-10);

    for (double beta : {0.0, 0.7}) {
        const auto g = gegenbauer_system(beta);
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m)
                CHECK(std::abs(biorth_pair(fourier_system(), g, n, m) - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("plane wave expansions") {
    const Params p(0.3, 0.2);
    for (double x : {0.0, 1.1, 6.0})
        for (double t : {-1.0, -0.3, 0.0, 0.8})
            CHECK(std::abs(planewave_partial_sum(p, x, t, 45) - dunkl_kernel(p.alpha, x * t)) < 1e-12);
    CHECK(std::abs(planewave_partial_sum(p, 0.0, 0.6, 5) - 1.0) < 1e-14);
    for (double beta : {0.0, 0.5, 1.3})
        CHECK(std::abs(gegenbauer_planewave_partial_sum(beta, 4.0, 0.35, 40) - std::exp(Cx(0.0, 1.4))) < 1e-12);
    // alpha = -1/2 reduces to the classical expansion with beta + 1/2
    const Params q(-0.5, 0.6);
    for (int N : {3, 10}) {
        const Cx a = planewave_partial_sum(q, 2.5, 0.4, N), b = gegenbauer_planewave_partial_sum(1.1, 2.5, 0.4, N);
        CHECK(std::abs(a - b) < 1e-13);
    }
    CHECK(std::abs(planewave_partial_sum(q, 2.5, 0.4, 40) - std::exp(Cx(0.0, 1.0))) < 1e-12);
    CHECK_THROWS_AS(planewave_partial_sum(p, 1.0, 1.2, 5), std::domain_error);
}

TEST_CASE("paley wiener function from a density") {
    for (double alpha : {-0.5, 0.0, 0.3, 1.5}) {
        const PWFunction f(alpha, [](double t) { return (1 - t * t) * (1 - t * t); });
        for (double x : {0.5, 3.0, 20.0, 90.0}) {
            const double sonine = 8.0 * bessel_j_scaled(alpha + 3.0, x);
            CHECK(std::abs(f(x) - sonine) < 1e-13);
        }
        CHECK(f(0.0).real() == doctest::Approx(2.0 / (tg(alpha) * (alpha + 1) * (alpha + 2) * (alpha + 3))).epsilon(1e-13));
    }
}

TEST_CASE("sampling series") {
    const double alpha = 0.3;
    const PWFunction f(alpha, [](double t) { return (1 - t * t) * (1 - t * t) * (1.0 + 0.5 * t); });
    const SamplingSeries s(f, 30);
    for (int m : {-7, -1, 0, 2, 30}) {
        const double sm = s.zeros().signed_zero(m);
        CHECK(std::abs(s(sm) - f(sm)) < 1e-14);
    }
    double prev = 1.0;
    for (int N : {10, 40, 160}) {
        const double err = std::abs(dunkl_sampling_sum(f, 2.7, N) - f(2.7));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-6);

    SUBCASE("paired forms") {
        const PWFunction fe(alpha, [](double t) { return (1 - t * t) * (1 - t * t); });
        const PWFunction fo(alpha, [](double t) { return t * (1 - t * t); });
        const int N = 5;
        const SamplingSeries se(fe, N), so(fo, N);
        std::vector<double> ve, vo;
        for (int n = 0; n <= N; ++n) {
            ve.push_back(se.sample(n).real());
            vo.push_back(so.sample(n).imag());
        }
        for (double x : {0.7, 3.3, 11.0}) {
            CHECK(hankel_sampling_even(alpha, se.zeros(), ve, x) == doctest::Approx(se(x).real()).epsilon(1e-12));
            CHECK(hankel_sampling_odd(alpha, so.zeros(), vo, x) == doctest::Approx(so(x).imag()).epsilon(1e-12));
        }
    }
}

TEST_CASE("fourier-neumann coefficients") {
    const Params p(0.3, 0.2);
    const GenGegenbauerFamily fam(p);
    SUBCASE("Q_0 gives a delta") {
        const double h0 = fam.norm(0);
        const PWFunction f(p.alpha, [h0](double) { return 1.0 / h0; }, p.beta);
        const auto a = fourier_neumann_coeffs(p, f, 5);
        const auto b = fourier_neumann_coeffs_density(p, f, 5);
        for (int n = 0; n < 5; ++n) {
            // a_n = 2^{g+1} Gamma(g+1) delta_{n0} for u = Q_0
            const double want = n == 0 ? tg(p.sum()) : 0.0;
            CHECK(std::abs(a.at(n) - want) < 1e-7);
            CHECK(std::abs(b.at(n) - want) < 1e-12);
        }
    }
    SUBCASE("swap route agrees with the density route") {
        const PWFunction f(p.alpha, [](double t) { return 1.0 + t + 2.0 * t * t * t; }, p.beta);
        const auto a = fourier_neumann_coeffs(p, f, 6);
        const auto b = fourier_neumann_coeffs_density(p, f, 6);
        for (int n = 0; n < 6; ++n) CHECK(std::abs(a.at(n) - b.at(n)) < 1e-6);
        // u = (1-t^2)^beta times a cubic
        CHECK(std::abs(b.at(4)) < 1e-12);
        CHECK(std::abs(b.at(5)) < 1e-12);
    }
    SUBCASE("series reconstructs f") {
        const PWFunction f(p.alpha, [](double t) { return std::exp(t) * (1 - t * t); });
        const auto b = fourier_neumann_coeffs_density(p, f, 25);
        for (double x : {0.0, 1.7, 6.0}) CHECK(std::abs(fourier_neumann_sum(p, b, x) - f(x)) < 1e-10);
    }
}

TEST_CASE("dunkl transform of neumann functions") {
    const Params p(0.3, 0.2);
    for (int k : {0, 1, 2, 3})
        for (double t : {-0.7, 0.5})
            CHECK(std::abs(dunkl_transform_neumann(p, k, t) - dunkl_transform_neumann_closed(p, k, t)) < 1e-6);
    CHECK(std::abs(dunkl_transform_neumann(p, 2, 1.5)) < 1e-8);
    CHECK(dunkl_transform_neumann_closed(p, 2, 1.5) == Cx(0.0));
}

TEST_CASE("neumann function orthogonality") {
    const double a = 0.4;
    CHECK(neumann_inner(a, 1, 1) == doctest::Approx(1.0 / (tg(a) * (a + 2.0))).epsilon(1e-7));
    CHECK(neumann_inner(a, 0, 0) == doctest::Approx(1.0 / (tg(a) * (a + 1.0))).epsilon(1e-7));
    CHECK(std::abs(neumann_inner(a, 1, 3)) < 1e-7);
    CHECK(std::abs(neumann_inner(a, 0, 2)) < 1e-7);
    CHECK(neumann_inner(a, 0, 1) == 0.0);
}

TEST_CASE("gegenbauer S and T are biorthogonal on the line") {
    for (double beta : {1.0, 0.3}) {
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m)
                worst = std::max(worst, std::abs(gegenbauer_st_pair(beta, n, m) - (n == m ? 1.0 : 0.0)));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("hankel corollary") {
    const Params p(0.3, 0.2);
    CHECK(std::abs(hankel_corollary_sum(p, 1.5, 0.5, 40) - bessel_j_scaled(0.3, 0.75)) < 1e-10);
    // the real part of the plane wave is I_alpha(ixt) = 2^alpha Gamma(alpha+1) J_alpha(xt)/(xt)^alpha
    const Params q(0.5, 0.2);
    const double re = planewave_partial_sum(q, 2.0, 0.6, 40).real();
    CHECK(std::abs(std::pow(2.0, 0.5) * std::tgamma(1.5) * hankel_corollary_sum(q, 2.0, 0.6, 30) - re) < 1e-10);
    CHECK(std::abs(hankel_corollary_sum(p, 1.5, 1e-4, 40) - 1.0 / (std::pow(2.0, 0.3) * std::tgamma(1.3))) < 1e-8);
    CHECK_THROWS_AS(hankel_corollary_sum(p, 0.0, 0.5, 4), std::domain_error);
}

TEST_CASE("kernel norm closed form") {
    for (double alpha : {-0.5, 0.0, 0.35, 2.0})
        for (double x : {0.0, 0.9, 5.0, 23.0}) {
            const double quad =
                integrate_interval([&](double r) { return std::norm(dunkl_kernel(alpha, x * r)); }, Measure::mu(alpha), 160);
            CHECK(kernel_norm_sq(alpha, x) == doctest::Approx(quad).epsilon(1e-12));
        }
    CHECK(kernel_norm_sq(0.35, 0.0) == doctest::Approx(1.0 / (tg(0.35) * 1.35)).epsilon(1e-14));
    CHECK(kernel_norm_sq(-0.5, 4.0) == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-14));
}

TEST_CASE("dunkl kernel multiplication invariant") {
    // int E(ixs) E(-iys) f(s) dmu over the line equals the transform of f at x - y only for alpha = -1/2;
    // for general alpha check the symmetric identity int E(ixs) conj(E(iys)) dmu = int E(iys) conj(E(ixs)) dmu conj
    const double alpha = 0.3;
    const auto g = [&](double x, double y) {
        return integrate_interval([&](double s) { return dunkl_kernel(alpha, x * s) * std::conj(dunkl_kernel(alpha, y * s)); },
                                  Measure::mu(alpha), 160);
    };
    const Cx a = g(2.0, 3.5), b = g(3.5, 2.0);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
    CHECK(std::abs(g(2.0, 2.0) - kernel_norm_sq(alpha, 2.0)) < 1e-13);
}

TEST_CASE("bessel-jacobi integral forms") {
    for (auto [al, be, n] : {std::tuple{0.3, 0.2, 0}, {0.3, 0.2, 1}, {0.5, -0.1, 2}}) {
        const Params p(al, be);
        for (double t : {0.4, 0.7}) {
            const auto m = bessel_jacobi_minus(p, n, t);
            const auto q = bessel_jacobi_plus(p, n, t);
            CHECK(std::abs(m.quadrature - m.closed) <= 1e-5 * std::abs(m.closed));
            CHECK(std::abs(q.quadrature - q.closed) <= 1e-5 * std::abs(q.closed));
        }
        const auto v = bessel_jacobi_minus(p, n, 1.5);
        CHECK(v.closed == 0.0);
        CHECK(std::abs(v.quadrature) < 1e-5);
    }
    CHECK_THROWS_AS(bessel_jacobi_minus(Params(0.3, 0.2), 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_jacobi_plus(Params(0.3, 1.2), 1, 0.5), std::domain_error);
}
