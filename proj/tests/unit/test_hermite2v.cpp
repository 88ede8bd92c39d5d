#include <doctest.h>

#include <array>
#include <random>

#include "reference.hpp"
#include "sqexc/errors.hpp"
#include "sqexc/hermite2v.hpp"
#include "sqexc/polymath.hpp"

using namespace sqexc;
using namespace sqexc::testing;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

cplx disk(std::mt19937_64& g, double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r * std::sqrt(u(g)), 2.0 * M_PI * u(g));
}

}  // namespace

TEST_CASE("two-variable hermite examples") {
    const SymMatrix2 R{{0.3, 1}, {-0.2, 0.5}, {1.1, 0}};
    CHECK(hermite2(R, {0.4, 0.1}, {-1, 2}, 0, 0) == cplx(1));
    const SymMatrix2 D{2.0, 0.0, 2.0};
    const cplx y1(0.3, -0.7), y2(1.2, 0.4);
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            CHECK(rel(hermite2(D, y1, y2, m, n), hermite(m, y1) * hermite(n, y2)) < 1e-13);
    const SymMatrix2 X{0.0, 1.0, 0.0};
    CHECK(std::abs(hermite2(X, 1.0, 2.0, 2, 1)) < 1e-14);
    CHECK(std::abs(hermite2_laguerre(1.0, 1.0, 2.0, 2, 1)) < 1e-14);
}

TEST_CASE("laguerre special case") {
    for (const cplx t : {cplx(0.5), cplx(1.0), cplx(2.0), cplx(0.7, 0.4)}) {
        const SymMatrix2 X{0.0, t, 0.0};
        const cplx y1(0.6, 0.2), y2(-0.3, 1.1);
        for (int m = 0; m <= 10; ++m)
            for (int n = 0; n <= 10; ++n)
                CHECK(rel(hermite2_laguerre(t, y1, y2, m, n), hermite2(X, y1, y2, m, n)) < 1e-12);
    }
}

TEST_CASE("two-variable hermite matches its generating function") {
    const SymMatrix2 R{{0.8, 0.3}, {0.4, -0.2}, {1.3, 0.1}};
    const cplx y1(0.5, -0.2), y2(-0.7, 0.6);
    const cplx a1(0.1, 0.05), a2(-0.08, 0.1);
    const int K = 40;
    const auto table = hermite2_table(R, R.r11 * y1 + R.r12 * y2, R.r12 * y1 + R.r22 * y2, K, K);
    cplx series = 0.0;
    for (int m = 0; m <= K; ++m)
        for (int n = 0; n <= K; ++n)
            series += table[m * (K + 1) + n] * std::pow(a1, m) * std::pow(a2, n) /
                      static_cast<double>(fact(m) * fact(n));
    const cplx aRa = R.r11 * a1 * a1 + 2.0 * R.r12 * a1 * a2 + R.r22 * a2 * a2;
    const cplx aRy = a1 * (R.r11 * y1 + R.r12 * y2) + a2 * (R.r12 * y1 + R.r22 * y2);
    CHECK(std::abs(series - std::exp(-0.5 * aRa + aRy)) < 1e-13);
}

TEST_CASE("zero-argument values") {
    const SymMatrix2 R{{0.9, 0.2}, {0.5, -0.3}, {1.4, 0.0}};
    CHECK(hermite2_zero(R, 1, 0) == cplx(0));
    CHECK(std::abs(hermite2_zero(R, 1, 1) + R.r12) < 1e-15);
    CHECK(std::abs(hermite2_zero_assoc_legendre(R, 1, 1) + R.r12) < 1e-13);
    for (int n = 0; n <= 12; ++n) CHECK(rel(hermite2_zero_legendre(R, n), hermite2_zero(R, n, n)) < 1e-10);
}

TEST_CASE("zero-argument chain over random matrices") {
    std::mt19937_64 g(5);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const SymMatrix2 R{disk(g, 2.0), disk(g, 2.0), disk(g, 2.0)};
        for (int m = 0; m <= 12; ++m)
            for (int n = 0; n <= 12; ++n) {
                const cplx ref = hermite2(R, 0.0, 0.0, m, n);
                const double s = std::max(1.0, std::abs(ref));
                worst = std::max({worst, std::abs(hermite2_zero(R, m, n) - ref) / s,
                                  std::abs(hermite2_zero_assoc_legendre(R, m, n) - ref) / s,
                                  std::abs(hermite2_zero_jacobi(R, m, n) - ref) / s,
                                  std::abs(hermite2_zero_gegenbauer(R, m, n) - ref) / s});
            }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("product sum agrees with the recurrence") {
    std::mt19937_64 g(9);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const SymMatrix2 R{disk(g, 2.0) + 0.1, disk(g, 2.0), disk(g, 2.0) + 0.1};
        const cplx y1 = disk(g, 1.5), y2 = disk(g, 1.5);
        for (int m = 0; m <= 12; ++m)
            for (int n = 0; n <= 12; ++n) {
                const cplx ref = hermite2(R, y1, y2, m, n);
                worst = std::max(worst, std::abs(hermite2_product_sum(R, y1, y2, m, n) - ref) /
                                            std::max(1.0, std::abs(ref)));
            }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("hermite-gauss integral examples") {
    GaussIntegralParams1D p;
    CHECK(std::abs(gauss_hermite_integral_1d(0, 0, p) - std::sqrt(M_PI)) < 1e-14);
    CHECK(std::abs(gauss_hermite_integral_1d(1, 0, p)) < 1e-14);
    const GaussIntegralParams1D q{0.7, 0.3, 1.2, 0.4};
    const cplx ref = integrate(
        [&](double x) { return hermite(2, x) * hermite(1, 0.7 * x + 0.3) * std::exp(-1.2 * x * x + 0.4 * x); },
        -kInf, kInf);
    CHECK(rel(gauss_hermite_integral_1d(2, 1, q), ref) < 1e-9);
    CHECK_THROWS_AS(gauss_hermite_integral_1d(0, 0, {1.0, 0.0, -0.5, 0.0}), DivergentIntegralError);
}

TEST_CASE("hermite-gauss integral against quadrature") {
    std::mt19937_64 g(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0;
    for (int draw = 0; draw < 100; ++draw) {
        const GaussIntegralParams1D p{cplx(0.2 + 1.2 * u(g), 0.3 * (u(g) - 0.5)), disk(g, 0.8),
                                      cplx(0.6 + 1.4 * u(g), 0.6 * (u(g) - 0.5)), disk(g, 1.0)};
        const int m = static_cast<int>(u(g) * 7), n = static_cast<int>(u(g) * 7);
        double l1 = 0;
        const cplx ref = integrate(
            [&](double x) {
                return hermite(m, x) * hermite(n, p.lambda * x + p.d) * std::exp(-p.M * x * x + p.c * x);
            },
            -kInf, kInf, 1e-13, &l1);
        const cplx val = gauss_hermite_integral_1d(m, n, p);
        worst = std::max(worst, std::abs(val - ref) / std::max(std::abs(ref), 1e-3 * l1));
        if (std::abs(p.M - 1.0) > 0.05 && std::abs(p.M - p.lambda * p.lambda) > 0.05)
            worst = std::max(worst, std::abs(gauss_hermite_integral_1d_expanded(m, n, p) - val) /
                                        std::max(std::abs(val), 1e-3 * l1));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("one-variable reduction and the singular case") {
    const GaussIntegralParams1D p{0.7, 0.3, 1.2, 0.4};
    const auto r = gauss_hermite_params_1d(p);
    REQUIRE(r.y1.has_value());
    CHECK(std::abs(r.R.r11 * *r.y1 + r.R.r12 * *r.y2 - r.z1) < 1e-14);
    CHECK(std::abs(r.R.r12 * *r.y1 + r.R.r22 * *r.y2 - r.z2) < 1e-14);

    const auto s = gauss_hermite_params_1d({1.0, 0.0, 2.0, 0.0});
    CHECK(!s.y1.has_value());
    CHECK(std::abs(s.R.r11 - 1.0) < 1e-15);
    CHECK(std::abs(s.R.r12 + 1.0) < 1e-15);
    CHECK(std::abs(s.R.r22 - 1.0) < 1e-15);
}

TEST_CASE("N-variable reduction with N = 1 reproduces the scalar formulas") {
    Eigen::MatrixXcd S(1, 1), T(1, 1), M(1, 1), L(1, 1);
    Eigen::VectorXcd c(1), d(1);
    S(0, 0) = 2.0, T(0, 0) = 2.0, M(0, 0) = cplx(1.3, 0.2), L(0, 0) = cplx(0.6, -0.1);
    c(0) = cplx(0.4, 0.3), d(0) = cplx(-0.2, 0.1);
    const auto nd = gauss_hermite_params_nd(S, T, M, L, c, d);
    const auto r = gauss_hermite_params_1d({L(0, 0), d(0), M(0, 0), c(0)});
    CHECK(std::abs(nd.R(0, 0) - r.R.r11) < 1e-14);
    CHECK(std::abs(nd.R(0, 1) - r.R.r12) < 1e-14);
    CHECK(std::abs(nd.R(1, 1) - r.R.r22) < 1e-14);
    CHECK(std::abs(nd.z(0) - r.z1) < 1e-14);
    CHECK(std::abs(nd.z(1) - r.z2) < 1e-14);
    REQUIRE(nd.y.has_value());
    CHECK(std::abs((*nd.y)(0) - *r.y1) < 1e-12);
    CHECK(std::abs((*nd.y)(1) - *r.y2) < 1e-12);
    const std::array<int, 2> k{3, 2};
    CHECK(rel(nd.prefactor * hermite_multi(nd.R, nd.z, k), gauss_hermite_integral_1d(3, 2, {L(0, 0), d(0), M(0, 0), c(0)})) < 1e-12);

    M(0, 0) = 2.0, L(0, 0) = 1.0, c(0) = 0.0, d(0) = 0.0;
    const auto sing = gauss_hermite_params_nd(S, T, M, L, c, d);
    CHECK(!sing.y.has_value());
    CHECK(std::abs(sing.R(0, 1) + 1.0) < 1e-15);
    M(0, 0) = 0.0;
    CHECK_THROWS_AS(gauss_hermite_params_nd(S, T, M, L, c, d), SingularMatrixError);
}

TEST_CASE("N-variable integral with N = 2 against tensor quadrature") {
    Eigen::MatrixXcd S = 2.0 * Eigen::MatrixXcd::Identity(2, 2), T = S, M(2, 2), L(2, 2);
    Eigen::VectorXcd c(2), d(2);
    M << 1.2, 0.3, 0.3, 0.9;
    L << 0.7, -0.2, 0.4, 0.5;
    c << 0.3, -0.2;
    d << 0.1, 0.25;
    const auto nd = gauss_hermite_params_nd(S, T, M, L, c, d);
    CHECK((nd.R - nd.R.transpose()).norm() < 1e-13);
    const std::array<int, 4> k{2, 1, 1, 2};
    const cplx closed = nd.prefactor * hermite_multi(nd.R, nd.z, k);
    auto integrand = [&](double x1, double x2) {
        const cplx u1 = L(0, 0) * x1 + L(0, 1) * x2 + d(0), u2 = L(1, 0) * x1 + L(1, 1) * x2 + d(1);
        const cplx quad = M(0, 0) * x1 * x1 + 2.0 * M(0, 1) * x1 * x2 + M(1, 1) * x2 * x2;
        return hermite(2, x1) * hermite(1, x2) * hermite(1, u1) * hermite(2, u2) *
               std::exp(-quad + c(0) * x1 + c(1) * x2);
    };
    const cplx ref = integrate([&](double x1) { return integrate([&](double x2) { return integrand(x1, x2); }, -12, 12, 1e-12); },
                               -12, 12, 1e-12);
    CHECK(rel(closed, ref) < 1e-9);
}
