#include "biortho/orthopoly.hpp"
#include "biortho/quad.hpp"

#include <doctest.h>

#include <cmath>

using namespace biortho;

TEST_CASE("jacobi values") {
    const JacobiFamily f(0.3, -0.2);
    CHECK(f(0, 0.4) == 1.0);
    for (int n = 0; n <= 12; ++n)
        CHECK(f(n, 1.0) == doctest::Approx(std::tgamma(n + 1.3) / (std::tgamma(1.3) * std::tgamma(n + 1.0))).epsilon(1e-13));

    // 22.7.16: (n + b/2 + a/2 + 1)(1+z) P_n^{(a,b+1)} = (n+b+1) P_n + (n+1) P_{n+1}
    const double a = 0.3, b = -0.2, z = 0.37;
    const JacobiFamily g(a, b + 1.0);
    const double lhs = g(4, z);
    const double rhs = (2.0 * (4 + b + 1.0) * f(4, z) + 2.0 * 5 * f(5, z)) / ((8 + a + b + 2.0) * (1.0 + z));
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("jacobi identities on a grid") {
    for (double a : {-0.5, 0.0, 0.7, 2.1})
        for (double b : {-0.4, 0.25, 1.5}) {
            const JacobiFamily f(a, b), up(a, b + 1.0), down(a, b - 1.0 > -1.0 ? b - 1.0 : b);
            for (double y : {-0.95, -0.3, 0.2, 0.8})
                for (int n = 1; n <= 15; ++n) {
                    const double l = up(n, y) * (2.0 * n + a + b + 2.0) * (1.0 + y) / 2.0;
                    const double r = (n + b + 1.0) * f(n, y) + (n + 1.0) * f(n + 1, y);
                    CHECK(std::abs(l - r) < 1e-11 * std::max(1.0, std::abs(r)));
                    if (b - 1.0 > -1.0) {
                        const double l2 = (2.0 * n + a + b) * down(n, y);
                        const double r2 = (n + a + b) * f(n, y) + (n + a) * f(n - 1, y);
                        CHECK(std::abs(l2 - r2) < 1e-11 * std::max(1.0, std::abs(r2)));
                    }
                }
        }
}

TEST_CASE("jacobi sum and recurrence agree on overlap") {
    for (double a : {-0.5, 0.3, 1.4})
        for (double b : {-0.6, 0.2, 2.0}) {
            const JacobiFamily f(a, b);
            for (int n = 0; n <= jacobi_sum_max_degree; ++n)
                for (double y = -1.0; y <= 1.0; y += 0.125) {
                    const double s = f.hypergeometric(n, y), r = f.recurrence(n, y);
                    CHECK(std::abs(s - r) < 1e-11 * std::max(1.0, std::abs(r)));
                }
        }
}

TEST_CASE("generalised gegenbauer basics") {
    const Params p(0.4, 0.25);
    const GenGegenbauerFamily c(p);
    CHECK(c(0, 0.3) == 1.0);
    CHECK(c(1, 0.3) == doctest::Approx((p.sum() + 1.0) / (p.alpha + 1.0) * 0.3).epsilon(1e-14));
    for (int n = 0; n <= 20; ++n)
        for (double t : {0.1, 0.45, 0.9}) {
            const double s = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(c(n, -t) == doctest::Approx(s * c(n, t)).epsilon(1e-14));
        }
    for (int n = 0; n <= 10; ++n) {
        const Poly q = c.poly(n);
        CHECK(q.degree() == n);
        CHECK(q.c.back() != 0.0);
        for (double t : {-0.8, 0.33, 0.95}) CHECK(std::abs(q(t) - c(n, t)) < 1e-11 * std::max(1.0, std::abs(c(n, t))));
    }
}

TEST_CASE("gengeg at alpha = -1/2 is classical gegenbauer") {
    const GenGegenbauerFamily c(Params(-0.5, 1.0));
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(c(n, 0.41) - gegenbauer(1.5, n, 0.41)) < 1e-11);
    }
}

TEST_CASE("gengeg norms and orthogonality") {
    const Params p(0.4, 0.25);
    const GenGegenbauerFamily c(p);
    const double h0 = std::tgamma(p.beta + 1.0) / (std::pow(2.0, p.alpha + 1.0) * std::tgamma(p.sum() + 2.0));
    CHECK(c.norm(0) == doctest::Approx(h0).epsilon(1e-13));
    const Measure m = Measure::mu(p);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) {
            const double v = integrate_interval([&](double t) { return c(n, t) * c(k, t); }, m);
            const double want = n == k ? c.norm(n) : 0.0;
            CHECK(std::abs(v - want) / c.norm(n) <= 1e-8);
        }
    CHECK(std::abs(integrate_interval([&](double t) { return c(3, t) * c(5, t); }, Measure::mu(Params(0.4, 0.25)))) < 1e-9);
}

TEST_CASE("dunkl operator on polynomials") {
    const Poly p{{0.0, -1.0, 0.0, 1.0}};
    const Poly d = dunkl_apply_poly(-0.5, p);
    REQUIRE(d.c.size() == 3);
    CHECK(d.c[0] == -1.0);
    CHECK(d.c[1] == 0.0);
    CHECK(d.c[2] == 3.0);
    const Poly e = dunkl_apply_poly(0.8, Poly{{2.0, 0.0, 0.0, 0.0, 1.0}});
    CHECK(e.c[3] == 4.0);
    CHECK(e.max_abs_coeff() == 4.0);

    for (const Params p2 : {Params(0.3, 0.6), Params(-0.5, 0.2), Params(1.1, -0.4)}) {
        const GenGegenbauerFamily lo(p2), hi(p2.raised());
        for (int n = 1; n <= 10; ++n) {
            const Poly r = dunkl_apply_poly(p2.alpha, lo.poly(n)) - hi.poly(n - 1) * (2.0 * (p2.sum() + 1.0));
            CHECK(r.max_abs_coeff() < 1e-12 * std::max(1.0, lo.poly(n).max_abs_coeff()));
        }
    }
}

TEST_CASE("connection formulas") {
    {
        const Params p(0.5, 0.25);
        const GenGegenbauerFamily lo(p), hi(p.raised());
        for (int n = 1; n <= 9; ++n) {
            const auto cc = gengeg_connection(p, n);
            CHECK(cc.A > 0.0);
            CHECK(cc.B >= 0.0);
            for (double r : {-0.7, 0.0, 0.6}) {
                const double l = (p.sum() + 1.0) * (1.0 - r * r) * hi(n - 1, r);
                const double rr = cc.A * lo(n - 1, r) - cc.B * lo(n + 1, r);
                CHECK(std::abs(l - rr) < 1e-12);
            }
        }
        const auto c2 = gengeg_connection(p, 2);
        CHECK(c2.A == doctest::Approx((p.beta + 1) * (p.sum() + 2) / (p.sum() + 3)));
        CHECK(c2.B == doctest::Approx(1 * (p.alpha + 2) / (p.sum() + 3)));
    }
    {
        const Params p(0.2, 0.1);
        const GenGegenbauerFamily lo(p), hi(p.raised());
        for (int n = 0; n <= 10; ++n) {
            const double t = -0.33;
            const double prev = n >= 2 ? hi(n - 2, t) : 0.0;
            CHECK(std::abs(lo(n, t) - gengeg_lowering(p, n) * (hi(n, t) - prev)) < 1e-12);
        }
    }
}

TEST_CASE("classical helpers") {
    CHECK(chebyshev_t(5, 0.3) == doctest::Approx(std::cos(5.0 * std::acos(0.3))).epsilon(1e-14));
    CHECK(gegenbauer(1.0, 4, 0.3) == doctest::Approx(std::sin(5.0 * std::acos(0.3)) / std::sin(std::acos(0.3))));
    CHECK_THROWS(gegenbauer(0.0, 2, 0.1));
}
