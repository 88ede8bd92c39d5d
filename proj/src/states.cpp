#include "sqexc/states.hpp"

#include <cmath>
#include <numeric>

#include "sqexc/errors.hpp"
#include "sqexc/polymath.hpp"
#include "states_detail.hpp"

namespace sqexc {

namespace {

constexpr double kZetaSwitch = 1e-10;

void require_zeta_abs(double zeta_abs) {
    if (!(zeta_abs >= 0.0)) throw DomainError("|zeta| must be a nonnegative number");
    if (zeta_abs >= 1.0) throw NotNormalizableError("|zeta| >= 1: state is not normalizable");
}

// Displaced Fock state <m|D(beta)|n> through associated Laguerre polynomials.
cplx displaced_fock(cplx beta, int n, int m) {
    const double b2 = std::norm(beta);
    if (b2 == 0.0) return m == n ? 1.0 : 0.0;
    const int lo = std::min(m, n), d = std::abs(m - n);
    const cplx unit = m >= n ? beta / std::abs(beta) : -std::conj(beta) / std::abs(beta);
    const double logmag = 0.5 * (log_factorial(lo) - log_factorial(lo + d)) + d * std::log(std::abs(beta)) - 0.5 * b2;
    return std::exp(logmag) * std::pow(unit, d) * assoc_laguerre(lo, d, b2);
}

}  // namespace

void check_label(const StateLabel& s) {
    if (s.n < 0) throw DomainError("excitation number n must be nonnegative");
    if (!(s.hbar > 0.0) || !std::isfinite(s.hbar)) throw DomainError("hbar must be positive");
    if (!std::isfinite(s.beta.real()) || !std::isfinite(s.beta.imag()) ||
        !std::isfinite(s.zeta.real()) || !std::isfinite(s.zeta.imag()))
        throw DomainError("beta and zeta must be finite");
}

void check_normalizable(const StateLabel& s) {
    check_label(s);
    require_zeta_abs(std::abs(s.zeta));
}

double inverse_norm_squared(int n, double zeta_abs) {
    if (n < 0) throw DomainError("excitation number n must be nonnegative");
    require_zeta_abs(zeta_abs);
    const double y = zeta_abs * zeta_abs;
    const double z = (1.0 + y) / (1.0 - y);
    return std::sqrt(z) * legendre(n, z).real();
}

double inverse_norm_squared_series(int n, double zeta_abs) {
    if (n < 0) throw DomainError("excitation number n must be nonnegative");
    require_zeta_abs(zeta_abs);
    const double y = zeta_abs * zeta_abs;
    const double u = zeta_abs / (1.0 + y);
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k)
        sum += std::exp(log_factorial(n) - 2.0 * log_factorial(k) - log_factorial(n - 2 * k)) *
               std::pow(u, 2 * k);
    return std::pow((1.0 + y) / (1.0 - y), n + 0.5) * sum;
}

double normalization(int n, double zeta_abs) { return 1.0 / std::sqrt(inverse_norm_squared(n, zeta_abs)); }

namespace detail {

cplx bilinear_sum(int m, int n, cplx kappa, const std::vector<cplx>& t1, const std::vector<cplx>& t2) {
    cplx sum = 0.0;
    cplx kj = 1.0;
    for (int j = 0; j <= std::min(m, n); ++j) {
        const double c = std::exp(0.5 * (log_factorial(m) + log_factorial(n) - 2.0 * log_factorial(j) -
                                         log_factorial(m - j) - log_factorial(n - j)));
        const cplx term = c * kj * t1[m - j] * t2[n - j];
        sum += (j % 2 ? -term : term);
        kj *= kappa;
    }
    return sum;
}

}  // namespace detail

FockCoefficients fock_coefficients(const StateLabel& s, int cutoff, bool normalize) {
    check_normalizable(s);
    if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
    FockCoefficients out;
    out.cutoff = cutoff;
    out.normalized = normalize;
    out.coeffs.resize(cutoff + 1);

    const cplx beta = s.beta, zeta = s.zeta;
    const double y = std::norm(zeta);
    if (std::abs(zeta) < kZetaSwitch) {
        for (int m = 0; m <= cutoff; ++m) out.coeffs[m] = displaced_fock(beta, s.n, m);
    } else {
        const cplx x1 = beta + zeta * std::conj(beta);
        const cplx x2 = std::sqrt(1.0 + y) * std::conj(beta);
        const cplx pref = std::pow(1.0 + y, 0.25) * std::exp(-0.5 * x1 * std::conj(beta));
        const auto t1 = scaled_hermite_table(cutoff, x1, zeta / 2.0, pref);
        const auto t2 = scaled_hermite_table(s.n, x2, std::conj(zeta) / 2.0);
        const double sign = s.n % 2 ? -1.0 : 1.0;
        for (int m = 0; m <= cutoff; ++m)
            out.coeffs[m] = sign * detail::bilinear_sum(m, s.n, std::sqrt(1.0 + y), t1, t2);
    }
    if (normalize) {
        const double N = normalization(s.n, std::abs(zeta));
        double mass = 0.0;
        for (auto& c : out.coeffs) {
            c *= N;
            mass += std::norm(c);
        }
        out.tail_mass = std::max(0.0, 1.0 - mass);
    }
    return out;
}

cplx fock_coefficient(const StateLabel& s, int m) {
    if (m < 0) throw DomainError("photon number m must be nonnegative");
    return fock_coefficients(s, m, false).coeffs[m];
}

cplx squeezed_fock_coefficient_jacobi(int n, cplx zeta, int m) {
    if (n < 0 || m < 0) throw DomainError("indices must be nonnegative");
    require_zeta_abs(std::abs(zeta));
    const double y = std::norm(zeta);
    const double c = std::exp(0.5 * (log_factorial(n + 2 * m) + log_factorial(n)) - log_factorial(n + m)) /
                     std::pow(2.0, m);
    return std::pow(1.0 + y, 0.25) * c * std::pow(-zeta, m) * jacobi(n, m, m, std::sqrt(1.0 + y));
}

cplx psi_q(const StateLabel& s, double q) {
    check_label(s);
    const cplx zeta = s.zeta;
    if (zeta == 1.0) throw SingularParameterError("psi_q is singular at zeta = 1");
    const double y = std::norm(zeta), hb = s.hbar;
    const cplx beta = s.beta;
    const cplx s1 = std::sqrt(1.0 - zeta), s2 = std::sqrt(1.0 + std::conj(zeta));
    const double qq = q - std::sqrt(2.0 * hb) * beta.real();
    const cplx X = std::sqrt(1.0 + y) / (s1 * s2 * std::sqrt(hb)) * qq;
    const cplx t = s2 / s1;
    const cplx expo = -(1.0 + zeta) / (1.0 - zeta) / (2.0 * hb) * qq * qq +
                      (beta - std::conj(beta)) * q / std::sqrt(2.0 * hb) -
                      (beta * beta - std::conj(beta * beta)) / 4.0;
    const cplx seed = std::pow((1.0 + y) / (hb * M_PI), 0.25) / s1 * std::exp(expo);
    // t^n H_n(X) / sqrt(2^n n!) = S_n(sqrt2 t X, t^2/2) / sqrt(n!)
    return scaled_hermite_table(s.n, std::sqrt(2.0) * t * X, t * t / 2.0, seed).back();
}

cplx psi_p(const StateLabel& s, double p) {
    check_label(s);
    const cplx zeta = s.zeta;
    if (zeta == -1.0) throw SingularParameterError("psi_p is singular at zeta = -1");
    const double y = std::norm(zeta), hb = s.hbar;
    const cplx beta = s.beta;
    const cplx s3 = std::sqrt(1.0 - std::conj(zeta)), s4 = std::sqrt(1.0 + zeta);
    const double pp = p - std::sqrt(2.0 * hb) * beta.imag();
    const cplx X = std::sqrt(1.0 + y) / (s3 * s4 * std::sqrt(hb)) * pp;
    const cplx t = cplx(0.0, -1.0) * s3 / s4;
    const cplx expo = -(1.0 - zeta) / (1.0 + zeta) / (2.0 * hb) * pp * pp -
                      cplx(0.0, 1.0) * (beta + std::conj(beta)) * p / std::sqrt(2.0 * hb) +
                      (beta * beta - std::conj(beta * beta)) / 4.0;
    const cplx seed = std::pow((1.0 + y) / (hb * M_PI), 0.25) / s4 * std::exp(expo);
    return scaled_hermite_table(s.n, std::sqrt(2.0) * t * X, t * t / 2.0, seed).back();
}

cplx bargmann(const StateLabel& s, cplx alpha_conj) {
    check_label(s);
    const cplx zeta = s.zeta, beta = s.beta;
    const double y = std::norm(zeta);
    const cplx u = alpha_conj - std::conj(beta);
    const cplx seed = std::pow(1.0 + y, 0.25) *
                      std::exp(alpha_conj * beta - 0.5 * zeta * u * u - 0.5 * std::norm(beta));
    return scaled_hermite_table(s.n, std::sqrt(1.0 + y) * u, std::conj(zeta) / 2.0, seed).back();
}

}  // namespace sqexc
