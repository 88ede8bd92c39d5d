#include "sqexc/photonstats.hpp"

#include <cmath>

#include "sqexc/errors.hpp"
#include "sqexc/polymath.hpp"
#include "sqexc/states.hpp"

namespace sqexc {

namespace {

constexpr int kMaxCutoff = 1 << 15;
constexpr double kTailLimit = 1e-6;

double unit_argument(double y) { return (1.0 + y) / (1.0 - y); }

void require_y(double y) {
    if (!(y >= 0.0)) throw DomainError("y = |zeta|^2 must be nonnegative");
    if (y >= 1.0) throw NotNormalizableError("|zeta| >= 1: state is not normalizable");
}

}  // namespace

PhotonDistribution photon_distribution(const StateLabel& s, int cutoff) {
    const auto fc = fock_coefficients(s, cutoff, true);
    PhotonDistribution d;
    d.cutoff = cutoff;
    d.probs.reserve(fc.coeffs.size());
    for (const auto& c : fc.coeffs) d.probs.push_back(std::norm(c));
    d.tail_mass = fc.tail_mass;
    if (d.tail_mass > kTailLimit)
        throw CutoffError("cutoff " + std::to_string(cutoff) + " leaves tail mass " + std::to_string(d.tail_mass) +
                          "; increase the cutoff");
    return d;
}

PhotonDistribution photon_distribution_auto(const StateLabel& s, double tail_tol) {
    check_normalizable(s);
    const double nbar = mean_photon(s);
    int cutoff = std::max(32, static_cast<int>(std::ceil(2.0 * nbar + 20.0)));
    for (;;) {
        try {
            auto d = photon_distribution(s, cutoff);
            if (d.tail_mass <= tail_tol) return d;
            if (cutoff >= kMaxCutoff) return d;
        } catch (const CutoffError&) {
            if (cutoff >= kMaxCutoff) throw;
        }
        cutoff = std::min(2 * cutoff, kMaxCutoff);
    }
}

double mean_photon(const StateLabel& s) {
    check_normalizable(s);
    const double y = std::norm(s.zeta);
    return (s.n + (s.n + 1) * y) / (1.0 - y) + std::norm(s.beta);
}

double mean_photon_jacobi(const StateLabel& s) {
    check_normalizable(s);
    const int n = s.n;
    const double y = std::norm(s.zeta), z = unit_argument(y);
    const double P = legendre(n, z).real();
    const double P11 = jacobi(n, 1, 1, z).real();
    const double P11m2 = n >= 2 ? jacobi(n - 2, 1, 1, z).real() : 0.0;
    const double inner = (n - (n + 1) * y) * P + y / (1.0 - y) * ((n + 2) * P11 - n * P11m2);
    return inner / ((1.0 + y) * P) + std::norm(s.beta);
}

double f_ratio(int n, double y) {
    if (n < 0) throw DomainError("f_ratio: n must be nonnegative");
    require_y(y);
    if (n == 0) return -(1.0 - y);
    if (n == 1) return 0.0;
    const double z = unit_argument(y);
    return jacobi(n - 2, 1, 1, z).real() / legendre(n, z).real();
}

double f_ratio_table(int n, double y) {
    require_y(y);
    const double a = (1.0 - y) * (1.0 - y);
    switch (n) {
        case 0: return -(1.0 - y);
        case 1: return 0.0;
        case 2: return a / (1.0 + 4.0 * y + y * y);
        case 3: return 2.0 * a / (1.0 + 8.0 * y + y * y);
        case 4:
            return 3.0 * a * (1.0 + 3.0 * y + y * y) /
                   (1.0 + 16.0 * y + 36.0 * y * y + 16.0 * y * y * y + y * y * y * y);
        case 5:
            return 4.0 * a * (1.0 + 5.0 * y + y * y) /
                   (1.0 + 24.0 * y + 76.0 * y * y + 24.0 * y * y * y + y * y * y * y);
        default: throw DomainError("f_ratio_table: tabulated only for n <= 5");
    }
}

MomentReport moments(const StateLabel& s) {
    check_normalizable(s);
    const int n = s.n;
    const cplx zeta = s.zeta, beta = s.beta;
    const double y = std::norm(zeta), hb = s.hbar;
    const double nf = n * f_ratio(n, y);  // n f_n, zero for n = 0, 1
    const double twoRe = 2.0 * zeta.real();

    MomentReport r;
    r.mean_a = beta;
    r.mean_adag = std::conj(beta);
    r.mean_a2 = -zeta / (1.0 - y) * (2.0 * n + 1.0 + nf) + beta * beta;
    r.mean_N = mean_photon(s);
    r.varQ = hb / 2.0 * ((2.0 * n + 1.0) * std::norm(1.0 - zeta) / (1.0 - y) - twoRe * nf / (1.0 - y));
    r.varP = hb / 2.0 * ((2.0 * n + 1.0) * std::norm(1.0 + zeta) / (1.0 - y) + twoRe * nf / (1.0 - y));
    r.covQP_sym = -2.0 * hb * zeta.imag() / (1.0 - y) * (2.0 * n + 1.0 + nf);
    r.unc_sum = hb * (2.0 * n + 1.0) * (1.0 + y) / (1.0 - y);
    const double d2 = (1.0 - y) * (1.0 - y);
    r.unc_prod = hb * hb / 4.0 *
                 ((2.0 * n + 1.0) * (2.0 * n + 1.0) * std::norm(1.0 - zeta * zeta) / d2 -
                  nf * (2.0 * (2.0 * n + 1.0) + nf) * twoRe * twoRe / d2);
    return r;
}

}  // namespace sqexc
