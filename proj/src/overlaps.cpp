#include "sqexc/overlaps.hpp"

#include <cmath>

#include "sqexc/errors.hpp"
#include "sqexc/hermite2v.hpp"
#include "sqexc/polymath.hpp"
#include "states_detail.hpp"

namespace sqexc {

namespace {

constexpr double kPairGuard = 1e-8;

cplx pair_denominator(cplx xi, cplx zeta) {
    const cplx D = 1.0 - zeta * std::conj(xi);
    if (std::abs(D) < kPairGuard) throw SingularPairError("1 - zeta conj(xi) vanishes: no finite scalar product");
    return D;
}

void require_indices(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("excitation numbers must be nonnegative");
}

// Phase of D(alpha)^dagger D(beta) = phase * D(beta - alpha).
cplx displacement_phase(cplx alpha, cplx beta) {
    return std::exp(0.5 * (std::conj(alpha) * beta - alpha * std::conj(beta)));
}

struct Coordinate {
    cplx K, kappa, g;
    double q0, k;
    cplx phi0;
};

// psi(q) = K H_n(kappa (q - q0)) exp(-g (q - q0)^2 + i k q + phi0)
Coordinate coordinate_form(cplx beta, int n, cplx zeta, double hbar) {
    if (zeta == 1.0) throw SingularParameterError("coordinate form is singular at zeta = 1");
    const double y = std::norm(zeta);
    const cplx s1 = std::sqrt(1.0 - zeta), s2 = std::sqrt(1.0 + std::conj(zeta));
    Coordinate c;
    c.K = std::pow(s2 / s1, n) / std::sqrt(std::pow(2.0, n) * std::exp(log_factorial(n))) *
          std::pow((1.0 + y) / (hbar * M_PI), 0.25) / s1;
    c.kappa = std::sqrt(1.0 + y) / (s1 * s2 * std::sqrt(hbar));
    c.g = (1.0 + zeta) / ((1.0 - zeta) * 2.0 * hbar);
    c.q0 = std::sqrt(2.0 * hbar) * beta.real();
    c.k = std::sqrt(2.0 / hbar) * beta.imag();
    c.phi0 = cplx(0.0, -beta.real() * beta.imag());
    return c;
}

}  // namespace

cplx overlap(const StateLabel& a, const StateLabel& b) {
    require_indices(a.n, b.n);
    const int m = a.n, n = b.n;
    const cplx xi = a.zeta, zeta = b.zeta;
    const cplx D = pair_denominator(xi, zeta);
    const cplx bb = b.beta - a.beta;
    const double ax = 1.0 + std::norm(xi), az = 1.0 + std::norm(zeta);
    const cplx c = std::sqrt(ax * az);

    const cplx u = bb + zeta * std::conj(bb);
    const cplx v = std::conj(bb) + std::conj(xi) * bb;
    const cplx pre = std::sqrt(c) / std::sqrt(D) * std::exp(-u * v / (2.0 * D));

    const auto t1 = scaled_hermite_table(m, std::sqrt(ax) * u / D, (xi + zeta) / (2.0 * D), pre);
    const auto t2 = scaled_hermite_table(n, std::sqrt(az) * v / D, std::conj(xi + zeta) / (2.0 * D));
    const double sign = n % 2 ? -1.0 : 1.0;
    return sign * detail::bilinear_sum(m, n, c / D, t1, t2) * displacement_phase(a.beta, b.beta);
}

cplx overlap_hermite2(const StateLabel& a, const StateLabel& b) {
    require_indices(a.n, b.n);
    pair_denominator(a.zeta, b.zeta);
    const double hbar = 1.0;
    const cplx rel = b.beta - a.beta;
    const Coordinate ca = coordinate_form(0.0, a.n, a.zeta, hbar);
    const Coordinate cb = coordinate_form(rel, b.n, b.zeta, hbar);
    const cplx M = std::conj(ca.g) + cb.g;
    if (M.real() <= 0.0) throw DivergentIntegralError("coordinate overlap integral diverges");
    const cplx lin = 2.0 * cb.g * cb.q0 + cplx(0.0, cb.k);
    const cplx konst = -cb.g * cb.q0 * cb.q0 + cb.phi0;
    const cplx I = hermite_gauss_integral(a.n, b.n, std::conj(ca.kappa), 0.0, cb.kappa, -cb.kappa * cb.q0, M, lin);
    return std::conj(ca.K) * cb.K * std::exp(konst) * I * displacement_phase(a.beta, b.beta);
}

cplx overlap_same_zeta(cplx beta, int m, int n, cplx zeta) {
    require_indices(m, n);
    const double y = std::norm(zeta);
    if (y >= 1.0) throw SingularParameterError("same-zeta scalar product needs |zeta| < 1");
    const cplx x = beta + zeta * std::conj(beta);
    const double r = std::sqrt(1.0 + y) / (1.0 - y);
    const cplx pre = std::sqrt((1.0 + y) / (1.0 - y)) * std::exp(-std::norm(x) / (2.0 * (1.0 - y)));
    const auto t1 = scaled_hermite_table(m, r * x, zeta / (1.0 - y), pre);
    const auto t2 = scaled_hermite_table(n, r * std::conj(x), std::conj(zeta) / (1.0 - y));
    const double sign = n % 2 ? -1.0 : 1.0;
    return sign * detail::bilinear_sum(m, n, (1.0 + y) / (1.0 - y), t1, t2);
}

cplx overlap_equal_beta(int n, int j, cplx xi, cplx zeta) {
    require_indices(n, j);
    const cplx D = pair_denominator(xi, zeta);
    const double c = std::sqrt((1.0 + std::norm(xi)) * (1.0 + std::norm(zeta)));
    const double f = std::exp(0.5 * (log_factorial(n + 2 * j) + log_factorial(n)) - log_factorial(n + j));
    return std::sqrt(c / D) * std::pow(std::abs(D) / D, n) * std::pow(-(xi + zeta) / (2.0 * D), j) * f *
           jacobi(n, j, j, c / std::abs(D));
}

cplx overlap_equal_beta_double_sum(int m, int n, cplx xi, cplx zeta) {
    require_indices(m, n);
    const cplx D = pair_denominator(xi, zeta);
    const double ax = 1.0 + std::norm(xi), az = 1.0 + std::norm(zeta);
    const cplx u = (xi + zeta) / (2.0 * ax), v = std::conj(xi + zeta) / (2.0 * az);
    cplx sum = 0.0;
    for (int k = 0; 2 * k <= m; ++k) {
        const int l2 = n - m + 2 * k;  // n - 2l = m - 2k
        if (l2 < 0 || l2 % 2) continue;
        const int l = l2 / 2;
        const double c = std::exp(log_factorial(m) + log_factorial(n) - log_factorial(k) - log_factorial(l) -
                                  0.5 * (log_factorial(m - 2 * k) + log_factorial(n - 2 * l)));
        sum += ((k + l) % 2 ? -c : c) * std::pow(u, k) * std::pow(v, l);
    }
    return std::pow(std::sqrt(ax / D), m + 0.5) * std::pow(std::sqrt(az / D), n + 0.5) * sum /
           std::exp(0.5 * (log_factorial(m) + log_factorial(n)));
}

cplx overlap_diag_jacobi(int n, int j, cplx zeta) {
    require_indices(n, j);
    const double y = std::norm(zeta);
    if (y >= 1.0) throw SingularParameterError("diagonal Jacobi form needs |zeta| < 1");
    const double z = (1.0 + y) / (1.0 - y);
    const double f = std::exp(0.5 * (log_factorial(n + 2 * j) + log_factorial(n)) - log_factorial(n + j));
    return std::sqrt(z) * std::pow(-zeta / (1.0 - y), j) * f * jacobi(n, j, j, z);
}

}  // namespace sqexc
