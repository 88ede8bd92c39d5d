#include "sqexc/quasiprob.hpp"

#include <cmath>
#include <string>

#include "sqexc/errors.hpp"
#include "sqexc/hermite2v.hpp"
#include "sqexc/polymath.hpp"
#include "sqexc/states.hpp"

namespace sqexc {

namespace {

constexpr double kResidue = 1e-10;

double take_real(cplx w, double scale, const char* what) {
    if (std::abs(w.imag()) > kResidue * std::max(scale, std::abs(w.real())))
        throw ConsistencyError(std::string(what) + ": imaginary residue " + std::to_string(w.imag()) +
                               " exceeds tolerance");
    return w.real();
}

// (-1)^n ((1+y)/(1-y))^n / P_n((1+y)/(1-y))
double parity_ratio(int n, double y) {
    const double z = (1.0 + y) / (1.0 - y);
    const double r = std::exp(n * std::log(z)) / legendre(n, z).real();
    return n % 2 ? -r : r;
}

// sum_j (-1)^j C(n,j) (1+y)^{-j} f(j), f(j) = |S_j(2X, zeta)|^2 / j!
template <class F>
cplx laguerre_like_sum(int n, double y, F&& f) {
    cplx sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        const cplx term = binomial(n, j) * std::pow(1.0 + y, -j) * f(j);
        sum += j % 2 ? -term : term;
    }
    return sum;
}

}  // namespace

double wigner(const StateLabel& s, double q, double p) {
    check_normalizable(s);
    const double hb = s.hbar, y = std::norm(s.zeta);
    const double qs = q - std::sqrt(2.0 * hb) * s.beta.real();
    const double ps = p - std::sqrt(2.0 * hb) * s.beta.imag();
    const cplx Z = (1.0 + s.zeta) * qs + cplx(0.0, 1.0) * (1.0 - s.zeta) * ps;
    const cplx X = std::sqrt((1.0 + y) / (2.0 * (1.0 - y) * hb)) * Z;
    const auto t = scaled_hermite_table(s.n, 2.0 * X, s.zeta);
    const cplx sum = laguerre_like_sum(s.n, y, [&](int j) { return std::norm(t[j]); });
    return std::exp(-std::norm(Z) / ((1.0 - y) * hb)) / (hb * M_PI) * parity_ratio(s.n, y) * sum.real();
}

double wigner_complex(const StateLabel& s, cplx alpha) {
    check_normalizable(s);
    const double y = std::norm(s.zeta);
    const cplx a = alpha - s.beta;
    const cplx u = a + s.zeta * std::conj(a);
    const cplx v = std::conj(a) + std::conj(s.zeta) * a;
    const double k = std::sqrt((1.0 + y) / (1.0 - y));
    const auto t1 = scaled_hermite_table(s.n, 2.0 * k * u, s.zeta);
    const auto t2 = scaled_hermite_table(s.n, 2.0 * k * v, std::conj(s.zeta));
    const cplx sum = laguerre_like_sum(s.n, y, [&](int j) { return t1[j] * t2[j]; });
    const cplx w = 2.0 / M_PI * std::exp(-2.0 * u * v / (1.0 - y)) * parity_ratio(s.n, y) * sum;
    return take_real(w, 2.0 / M_PI, "wigner_complex");
}

double wigner_hermite2(const StateLabel& s, double q, double p) {
    check_normalizable(s);
    const double hb = s.hbar, y = std::norm(s.zeta);
    const cplx zeta = s.zeta;
    const cplx s1 = std::sqrt(1.0 - zeta), s2 = std::sqrt(1.0 + std::conj(zeta));
    const double lognf = log_factorial(s.n);
    // psi(q) = K H_n(kappa (q - q0)) exp(-g (q - q0)^2 + i k q + phi0), |K|^2 below
    const double K2 = std::pow(std::norm(s2 / s1) / 2.0, s.n) / std::exp(lognf) *
                      std::sqrt((1.0 + y) / (hb * M_PI)) / std::norm(s1);
    const cplx kappa = std::sqrt(1.0 + y) / (s1 * s2 * std::sqrt(hb));
    const cplx g = (1.0 + zeta) / ((1.0 - zeta) * 2.0 * hb);
    const double q0 = std::sqrt(2.0 * hb) * s.beta.real();
    const double k = std::sqrt(2.0 / hb) * s.beta.imag();
    const double u = q - q0;

    const cplx M = g.real() / 2.0;
    const cplx c = cplx(0.0, 2.0 * g.imag() * u + (p / hb - k));
    const cplx I = hermite_gauss_integral(s.n, s.n, -kappa / 2.0, kappa * u, std::conj(kappa) / 2.0,
                                          std::conj(kappa) * u, M, c);
    const double N2 = 1.0 / inverse_norm_squared(s.n, std::abs(zeta));
    const cplx w = N2 * K2 * std::exp(-2.0 * g.real() * u * u) * I / (2.0 * M_PI * hb);
    return take_real(w, 1.0 / (M_PI * hb), "wigner_hermite2");
}

double husimi_q(const StateLabel& s, double q, double p) {
    check_normalizable(s);
    const double hb = s.hbar, y = std::norm(s.zeta);
    const cplx a = cplx(q, p) / std::sqrt(2.0 * hb) - s.beta;
    const auto t = scaled_hermite_table(s.n, std::sqrt(1.0 + y) * a, s.zeta / 2.0);
    const double z = (1.0 + y) / (1.0 - y);
    const double qa = std::sqrt(1.0 - y) / M_PI *
                      std::exp(-(std::norm(a) + (std::conj(s.zeta) * a * a).real())) * std::norm(t.back()) /
                      legendre(s.n, z).real();
    return qa / (2.0 * hb);
}

double PhaseGridSpec::q(int i) const {
    return nq == 1 ? 0.5 * (q_min + q_max) : q_min + (q_max - q_min) * i / (nq - 1);
}

double PhaseGridSpec::p(int j) const {
    return np == 1 ? 0.5 * (p_min + p_max) : p_min + (p_max - p_min) * j / (np - 1);
}

PhaseGrid grid_eval(const StateLabel& s, Quasi which, const PhaseGridSpec& g) {
    check_normalizable(s);
    if (!(g.q_min < g.q_max) || !(g.p_min < g.p_max)) throw DomainError("grid ranges must satisfy min < max");
    if (g.nq < 1 || g.np < 1) throw DomainError("grid sizes must be positive");
    PhaseGrid out;
    out.spec = g;
    out.values.resize(static_cast<std::size_t>(g.nq) * g.np);
    for (int i = 0; i < g.nq; ++i)
        for (int j = 0; j < g.np; ++j)
            out.values[static_cast<std::size_t>(i) * g.np + j] =
                which == Quasi::wigner ? wigner(s, g.q(i), g.p(j)) : husimi_q(s, g.q(i), g.p(j));
    return out;
}

SqueezeAxes squeeze_axes(double zeta_abs, double hbar) {
    if (!(zeta_abs >= 0.0)) throw DomainError("|zeta| must be nonnegative");
    if (zeta_abs >= 1.0) throw NotNormalizableError("|zeta| >= 1: no squeezing ellipse");
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
    return {std::sqrt(hbar * (1.0 + zeta_abs) / (1.0 - zeta_abs)),
            std::sqrt(hbar * (1.0 - zeta_abs) / (1.0 + zeta_abs))};
}

}  // namespace sqexc
